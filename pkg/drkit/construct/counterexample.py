from abc import ABC, abstractmethod
from fractions import Fraction

from ..core import VectorFamily, pairwise_distances, submatrix_ratio
from .params import CisParams

DEFAULT_MAX_SUBSETS = 2_000_000


class _CounterexampleCheck(ABC):
    """
    A way of confirming that every subset of more than q vectors of a
    constructed family has distance ratio at least a.
    """

    name = None

    def __init__(self, family: VectorFamily, params: CisParams, tree=None):
        self.family = family
        self.params = params
        self.tree = tree
        self._distances = None

    @property
    def distances(self):
        if self._distances is None:
            self._distances = pairwise_distances(self.family)
        return self._distances

    @abstractmethod
    def run(self, **kwargs):
        pass

    def subset_ratio(self, indices) -> Fraction:
        return submatrix_ratio(self.distances, indices)

    def describe(self, indices):
        """
        Human readable distance summary of a subset, used in violation details
        """
        ratio = self.subset_ratio(indices)
        return f"dr = {ratio.numerator}/{ratio.denominator} < a = {self.params.a}"
