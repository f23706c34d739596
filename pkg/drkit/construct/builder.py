import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from ..core import SupportVector, VectorFamily
from .params import CisParams, capacity


@dataclass(frozen=True)
class RecursionFrame:
    """
    Level i together with the sets S (coordinates every vector of the block
    is 1 on) and T (coordinates outside of which every vector is 0)
    """

    level: int
    S: Tuple[int, ...]
    T: Tuple[int, ...]


@dataclass(frozen=True)
class BlockTree:
    """
    Recursive partition of a constructed family. A level-0 node is a leaf
    holding one vector index; a level-i node holds q children of level i-1.
    Trees read back from text carry no frames.
    """

    level: int
    children: Tuple["BlockTree", ...] = ()
    leaf: Optional[int] = None
    frame: Optional[RecursionFrame] = None

    @property
    def is_leaf(self):
        return self.level == 0

    def leaves(self):
        if self.is_leaf:
            return [self.leaf]
        result = []
        for child in self.children:
            result.extend(child.leaves())
        return result

    def walk(self, path=()):
        """
        Pre-order traversal yielding (path, node); a path lists child positions
        from the root
        """
        yield path, self
        for r, child in enumerate(self.children):
            yield from child.walk(path + (r,))


def near_equal_runs(items, q):
    """
    Split `items` into q consecutive runs whose sizes differ by at most one,
    the first len(items) mod q runs being the longer ones
    """
    base, extra = divmod(len(items), q)
    runs, start = [], 0
    for r in range(q):
        size = base + (1 if r < extra else 0)
        runs.append(tuple(items[start:start + size]))
        start += size
    return runs


class _Builder:
    def __init__(self, params: CisParams):
        self.params = params
        self.vectors = []
        self.capacities = [capacity(i, params) for i in range(params.t + 1)]

    def build(self, frame: RecursionFrame) -> BlockTree:
        params = self.params
        i = frame.level
        core = set(frame.S)
        rest = [c for c in frame.T if c not in core]
        if i == 0:
            support = sorted(frame.S + tuple(rest[: params.p - len(frame.S)]))
            self.vectors.append(SupportVector(params.n, tuple(support)))
            return BlockTree(level=0, leaf=len(self.vectors) - 1, frame=frame)

        k = params.p // params.a ** (params.t - i) - params.p // params.a ** (params.t - i + 1)
        children = []
        for run in near_equal_runs(rest, params.q):
            child_T = tuple(sorted(frame.S + run))
            if len(child_T) < self.capacities[i - 1]:
                raise RuntimeError(
                    f"Capacity violated at level {i}: |S u T_r| = {len(child_T)} "
                    f"< f_{i - 1} = {self.capacities[i - 1]}"
                )
            child_S = tuple(sorted(frame.S + run[:k]))
            children.append(self.build(RecursionFrame(i - 1, child_S, child_T)))
        return BlockTree(level=i, children=tuple(children), frame=frame)


def build_cis(params: CisParams):
    """
    Build the level-t family between (empty set, [n]) by the recursive
    construction. Runs are cut from T minus S in ascending order, each child
    core takes the lowest coordinates of its run and every leaf fills its
    remaining ones from the lowest free coordinates, so equal params give
    identical output.
    :param params: CisParams
    :return: (VectorFamily, BlockTree)
    """
    if params.p % params.a ** params.t != 0:
        raise ValueError(f"p = {params.p} must be a multiple of a^t = {params.a ** params.t}")
    builder = _Builder(params)
    if params.n < builder.capacities[params.t]:
        raise RuntimeError(
            f"Capacity violated at level {params.t}: n = {params.n} < f_{params.t} = {builder.capacities[params.t]}"
        )
    logging.info(f"Building a level-{params.t} family of {params.family_size} vectors in dimension {params.n}")
    tree = builder.build(RecursionFrame(params.t, (), tuple(range(1, params.n + 1))))
    try:
        family = VectorFamily(params.n, params.p, builder.vectors)
    except ValueError as e:
        raise RuntimeError(f"Construction produced coinciding vectors: {e}") from e
    return family, tree
