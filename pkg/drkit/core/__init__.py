from .vectors import SupportVector, VectorFamily, DistanceStats
from .distances import (
    distance,
    distance_stats,
    distance_ratio,
    overlap,
    pairwise_distances,
    submatrix_ratio,
    SupportIndex,
)
