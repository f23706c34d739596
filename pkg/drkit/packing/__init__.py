from .slice import (
    PackingParams,
    enumerate_slice,
    greedy_packing,
    default_dmin,
    even_ceil,
    slice_size,
    meets_size_floor,
    FULL_LEX,
    SEEDED_SAMPLE,
    PACKING_BETA,
)
