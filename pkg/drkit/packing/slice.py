import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Tuple

from scipy.special import comb

from ..core import SupportIndex, SupportVector, VectorFamily
from ..oracle import random_family

FULL_LEX = "full_lex"
SEEDED_SAMPLE = "seeded_sample"
PACKING_BETA = Fraction(9, 10000)


def even_ceil(x):
    x = math.ceil(Fraction(x))
    return x + (x % 2)


def default_dmin(p):
    """
    Separation (p+1)/4 rounded up to an integer and then to the next even
    number, the only distances a constant-weight family can realise
    """
    return max(2, even_ceil(Fraction(p + 1, 4)))


@dataclass(frozen=True)
class PackingParams:
    """
    Packing of the weight-p slice of dimension n at minimum distance d_min.
    `sample` = (seed, count) scans `count` seeded random vectors instead of
    the full lexicographic slice.
    """

    n: int
    p: int
    d_min: int
    sample: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        if not 1 <= self.p <= self.n:
            raise ValueError(f"Weight p = {self.p} must lie in [1, n = {self.n}]")
        if self.d_min < 1:
            raise ValueError(f"d_min must be positive, got {self.d_min}")
        if self.d_min % 2 == 1:
            logging.info(f"Rounding odd d_min = {self.d_min} up to {self.d_min + 1}")
            object.__setattr__(self, "d_min", self.d_min + 1)
        if 2 * self.p >= self.n:
            logging.warning(f"p = {self.p} is not below n/2 = {Fraction(self.n, 2)}; the slice bound assumes p < n/2")

    @property
    def enumeration(self):
        return FULL_LEX if self.sample is None else SEEDED_SAMPLE

    def stream(self):
        if self.sample is None:
            return enumerate_slice(self.n, self.p)
        seed, count = self.sample
        return iter(random_family(self.n, self.p, count, seed))


def enumerate_slice(n, p):
    """
    Every weight-p support of [1, n] in lexicographic order, streamed
    """
    for support in combinations(range(1, n + 1), p):
        yield SupportVector(n, support)


def slice_size(n, p):
    return comb(n, p, exact=True)


def greedy_packing(params: PackingParams) -> VectorFamily:
    """
    Admit each scanned vector whose distance to every admitted vector is at
    least d_min. The output is maximal with respect to the scanned stream and
    its ratio is at most 2p/d_min.
    """
    index = SupportIndex(params.p)
    admitted = []
    scanned = 0
    for v in params.stream():
        scanned += 1
        if len(index) == 0 or index.distances(v).min() >= params.d_min:
            index.add(v)
            admitted.append(v)
    logging.info(f"Packing admitted {len(admitted)} of {scanned} scanned vectors at d_min = {params.d_min}")
    return VectorFamily(params.n, params.p, admitted)


def meets_size_floor(size, total, beta=PACKING_BETA):
    """
    Exact test of size >= total^beta, as size^den >= total^num
    """
    beta = Fraction(beta)
    return size ** beta.denominator >= total ** beta.numerator
