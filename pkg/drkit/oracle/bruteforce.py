import logging
import math
import os
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from itertools import combinations
from typing import Tuple

from ..core import VectorFamily, pairwise_distances, submatrix_ratio

DEFAULT_MAX_BRUTE = 20
MAX_BRUTE_ENV = "DRKIT_MAX_BRUTE"
EXPONENT_PLACES = Decimal("0.0001")


def brute_force_cap(cap=None):
    """
    Explicit cap first, then the DRKIT_MAX_BRUTE environment variable, then
    the default
    """
    if cap is not None:
        return int(cap)
    value = os.environ.get(MAX_BRUTE_ENV)
    if value:
        try:
            return int(value)
        except ValueError:
            raise ValueError(f"{MAX_BRUTE_ENV} must be an integer, got {value!r}")
    return DEFAULT_MAX_BRUTE


@dataclass(frozen=True)
class OracleResult:
    subset: Tuple[int, ...]
    size: int
    ratio: Fraction
    explored: int
    pruned: int

    def __str__(self):
        return (
            f"size={self.size} ratio={self.ratio.numerator}/{self.ratio.denominator} "
            f"subset={' '.join(str(i) for i in self.subset)} explored={self.explored} pruned={self.pruned}"
        )


@dataclass(frozen=True)
class AlphaSample:
    size: int
    exponent: Decimal


class _BranchAndBound:
    """
    Depth-first search over index-sorted subsets, including smaller indices
    first so subsets are met in lexicographic order. A branch is cut as soon
    as adding a vector pushes the ratio above C, since every superset keeps
    a ratio at least as large, and when the remaining candidates cannot beat
    the best size found.
    """

    def __init__(self, D, C):
        self.D = D
        self.m = len(D)
        self.num, self.den = C.numerator, C.denominator
        self.best, self.best_bounds = [], (None, None)
        self.explored = 0
        self.pruned = 0

    def run(self):
        self._search([], None, 0, 0)
        return self.best

    def _search(self, current, lo, hi, start):
        self.explored += 1
        if len(current) > len(self.best):
            self.best, self.best_bounds = list(current), (lo, hi)
        for j in range(start, self.m):
            if len(current) + (self.m - j) <= len(self.best):
                break
            new_lo, new_hi = lo, hi
            for x in current:
                d = self.D[x][j]
                new_hi = max(new_hi, d)
                new_lo = d if new_lo is None else min(new_lo, d)
            if new_lo is not None and new_hi * self.den > self.num * new_lo:
                self.pruned += 1
                continue
            current.append(j)
            self._search(current, new_lo, new_hi, j + 1)
            current.pop()


def _check_cap(K, cap):
    cap = brute_force_cap(cap)
    if len(K) > cap:
        raise ValueError(
            f"Brute force is limited to {cap} vectors, got {len(K)}; raise --cap or {MAX_BRUTE_ENV}, or sample"
        )


def best_subset_bruteforce(K: VectorFamily, C, cap=None) -> OracleResult:
    """
    Largest subset of K with distance ratio at most C; among subsets of that
    size the lexicographically smallest index list wins.
    :param cap: largest family accepted (falls back to DRKIT_MAX_BRUTE)
    """
    C = Fraction(C)
    _check_cap(K, cap)
    search = _BranchAndBound(pairwise_distances(K).tolist(), C)
    best = search.run()
    lo, hi = search.best_bounds
    ratio = Fraction(hi, lo) if lo else Fraction(1)
    logging.info(f"Oracle: best size {len(best)} after {search.explored} nodes, {search.pruned} pruned")
    return OracleResult(
        subset=tuple(best), size=len(best), ratio=ratio, explored=search.explored, pruned=search.pruned
    )


def best_subset_exhaustive(K: VectorFamily, C, cap=None) -> OracleResult:
    """
    Plain enumeration by decreasing size, no pruning. Only for cross-checking
    the branch and bound on small families.
    """
    C = Fraction(C)
    _check_cap(K, cap)
    D = pairwise_distances(K)
    explored = 0
    for size in range(len(K), 0, -1):
        for subset in combinations(range(len(K)), size):
            explored += 1
            ratio = submatrix_ratio(D, subset)
            if ratio <= C:
                return OracleResult(subset=subset, size=size, ratio=ratio, explored=explored, pruned=0)
    return OracleResult(subset=(), size=0, ratio=Fraction(1), explored=explored, pruned=0)


def empirical_alpha(K: VectorFamily, C, cap=None) -> AlphaSample:
    """
    Oracle size s and the exponent ln(s)/ln(|K|), rounded for display; the
    exponent is never used to decide anything.
    """
    if len(K) < 2:
        raise ValueError("Exponent undefined below two vectors")
    result = best_subset_bruteforce(K, C, cap=cap)
    return AlphaSample(size=result.size, exponent=exponent(result.size, len(K)))


def exponent(size, total):
    return Decimal(math.log(size) / math.log(total)).quantize(EXPONENT_PLACES)
