from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple


@dataclass(frozen=True)
class SupportVector:
    """
    A binary vector of length `dimension`, stored as the sorted list of its
    one-coordinates (1-based). Storage and distance cost depend on the weight
    only, never on the dimension.
    """

    dimension: int
    support: Tuple[int, ...]

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError(f"Dimension must be positive, got {self.dimension}")
        support = tuple(int(c) for c in self.support)
        previous = 0
        for c in support:
            if c <= previous or c > self.dimension:
                raise ValueError(
                    f"Support must be strictly increasing within [1, {self.dimension}], got {support}"
                )
            previous = c
        object.__setattr__(self, "support", support)

    @property
    def weight(self):
        return len(self.support)

    def __len__(self):
        return len(self.support)

    def __iter__(self):
        return iter(self.support)

    def __str__(self):
        return "{" + ",".join(str(c) for c in self.support) + "}"


class VectorFamily:
    """
    Ordered set of distinct SupportVectors sharing dimension n and weight p.
    Iteration follows the stored order.
    """

    def __init__(self, dimension: int, weight: int, vectors: Iterable[SupportVector] = ()):
        self.dimension = dimension
        self.weight = weight
        self.vectors = tuple(vectors)
        seen = {}
        for idx, v in enumerate(self.vectors):
            if v.dimension != dimension or v.weight != weight:
                raise ValueError(
                    f"Vector {idx} {v} has (n={v.dimension}, p={v.weight}), family expects (n={dimension}, p={weight})"
                )
            if v.support in seen:
                raise ValueError(f"Duplicate vector {v} at positions {seen[v.support]} and {idx}")
            seen[v.support] = idx
        self._positions = seen

    @classmethod
    def from_supports(cls, dimension: int, supports: Sequence[Sequence[int]], weight: int = None):
        if weight is None:
            if len(supports) == 0:
                raise ValueError("Weight must be given for an empty family")
            weight = len(supports[0])
        return cls(dimension, weight, [SupportVector(dimension, tuple(s)) for s in supports])

    def subset(self, indices: Iterable[int]) -> "VectorFamily":
        return VectorFamily(self.dimension, self.weight, [self.vectors[i] for i in indices])

    def supports(self):
        return [v.support for v in self.vectors]

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, idx):
        return self.vectors[idx]

    def __contains__(self, vector):
        return (
            isinstance(vector, SupportVector)
            and vector.dimension == self.dimension
            and vector.support in self._positions
        )

    def __eq__(self, other):
        if not isinstance(other, VectorFamily):
            return NotImplemented
        return (self.dimension, self.weight, self.vectors) == (other.dimension, other.weight, other.vectors)

    def __hash__(self):
        return hash((self.dimension, self.weight, self.vectors))

    def __repr__(self):
        return f"VectorFamily(n={self.dimension}, p={self.weight}, m={len(self)})"


@dataclass(frozen=True)
class DistanceStats:
    min_dist: int
    max_dist: int
    ratio: Fraction

    def __str__(self):
        return f"min={self.min_dist} max={self.max_dist} ratio={self.ratio.numerator}/{self.ratio.denominator}"
