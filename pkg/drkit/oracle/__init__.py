from .bruteforce import (
    OracleResult,
    AlphaSample,
    best_subset_bruteforce,
    best_subset_exhaustive,
    empirical_alpha,
    exponent,
    brute_force_cap,
    DEFAULT_MAX_BRUTE,
    MAX_BRUTE_ENV,
)
from .generator import SplitMix64, random_family, random_support
