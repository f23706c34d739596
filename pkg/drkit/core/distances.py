from collections import defaultdict
from fractions import Fraction

import numpy as np
from scipy.sparse import csr_matrix

from .vectors import DistanceStats, SupportVector, VectorFamily


def overlap(u: SupportVector, v: SupportVector) -> int:
    """
    Size of the intersection of two sorted supports (sorted merge, O(|u| + |v|))
    """
    a, b = u.support, v.support
    i = j = count = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            count += 1
            i += 1
            j += 1
        elif a[i] < b[j]:
            i += 1
        else:
            j += 1
    return count


def distance(u: SupportVector, v: SupportVector) -> int:
    """
    Hamming distance, i.e. the size of the symmetric difference of the supports.
    :param u:
    :param v:
    :return: non-negative integer, even when |u| = |v|
    """
    if u.dimension != v.dimension:
        raise ValueError(f"Dimension mismatch: {u.dimension} != {v.dimension}")
    return u.weight + v.weight - 2 * overlap(u, v)


def incidence_matrix(K: VectorFamily) -> csr_matrix:
    indptr = np.arange(0, (len(K) + 1) * K.weight, K.weight, dtype=np.int64)
    indices = np.fromiter(
        (c - 1 for v in K for c in v.support), dtype=np.int64, count=len(K) * K.weight
    )
    data = np.ones(len(indices), dtype=np.int64)
    return csr_matrix((data, indices, indptr), shape=(len(K), K.dimension))


def pairwise_distances(K: VectorFamily) -> np.ndarray:
    """
    Full m x m distance matrix of a constant-weight family, computed as
    2 * (p - A A^T) over the sparse incidence matrix A.
    """
    if len(K) == 0:
        return np.zeros((0, 0), dtype=np.int64)
    A = incidence_matrix(K)
    overlaps = (A @ A.T).toarray()
    return 2 * (K.weight - overlaps)


def distance_stats(K: VectorFamily) -> DistanceStats:
    if len(K) < 2:
        raise ValueError("Distance ratio undefined below two vectors")
    D = pairwise_distances(K)
    pairs = D[np.triu_indices(len(K), 1)]
    lo, hi = int(pairs.min()), int(pairs.max())
    return DistanceStats(min_dist=lo, max_dist=hi, ratio=Fraction(hi, lo))


def distance_ratio(K: VectorFamily) -> Fraction:
    """
    Exact distance ratio; a single vector has ratio 1 by convention.
    """
    if len(K) == 0:
        raise ValueError("Distance ratio undefined for an empty family")
    if len(K) == 1:
        return Fraction(1)
    return distance_stats(K).ratio


def submatrix_ratio(D: np.ndarray, indices) -> Fraction:
    """
    Distance ratio of the vectors at `indices`, read off a precomputed matrix
    """
    indices = list(indices)
    if len(indices) < 2:
        return Fraction(1)
    sub = D[np.ix_(indices, indices)]
    pairs = sub[np.triu_indices(len(indices), 1)]
    return Fraction(int(pairs.max()), int(pairs.min()))


class SupportIndex:
    """
    Incremental inverted index over constant-weight vectors: each coordinate
    keeps the list of stored vectors that are 1 there. Distances from a query
    to every stored vector come from one bincount over the posting lists of
    the query, independent of the dimension.
    """

    def __init__(self, weight):
        self.weight = weight
        self._postings = defaultdict(list)
        self._size = 0

    def __len__(self):
        return self._size

    def add(self, v: SupportVector):
        assert v.weight == self.weight, f"Index holds weight {self.weight}, got {v.weight}"
        for c in v.support:
            self._postings[c].append(self._size)
        self._size += 1

    def overlaps(self, v: SupportVector) -> np.ndarray:
        hits = [self._postings[c] for c in v.support if c in self._postings]
        if self._size == 0 or len(hits) == 0:
            return np.zeros(self._size, dtype=np.int64)
        return np.bincount(np.concatenate(hits), minlength=self._size)

    def distances(self, v: SupportVector) -> np.ndarray:
        return self.weight + v.weight - 2 * self.overlaps(v)
