from itertools import combinations

import numpy as np

from ..counterexample import _CounterexampleCheck
from ...report import VerificationReport


class StructuralCheck(_CounterexampleCheck):
    """
    Pigeonhole argument per tree node: q+1 vectors inside a node that meet
    two of its q children put two vectors in one child (distance at most the
    child's diameter) and two vectors in different children (distance at
    least the smallest cross distance). It suffices that every node's
    smallest cross distance is at least a times its largest child diameter.
    """

    name = "structural"

    def run(self, **kwargs):
        if self.tree is None:
            raise ValueError("Structural check needs a block tree")
        report = VerificationReport(name="counterexample (structural)")
        D = self.distances
        a, q = self.params.a, self.params.q
        for path, node in self.tree.walk():
            if node.is_leaf:
                continue
            blocks = [child.leaves() for child in node.children]
            if len(blocks) < 2:
                continue
            if sum(len(b) for b in blocks) <= q:
                continue
            report.checked += 1
            if len(blocks) > q:
                report.add(path, "children", f"{len(blocks)} children leave room for q+1 = {q + 1} in distinct blocks")
                continue

            diameter = max(int(D[np.ix_(b, b)].max()) for b in blocks)
            cross = min(int(D[np.ix_(left, right)].min()) for left, right in combinations(blocks, 2))
            if diameter > 0 and cross < a * diameter:
                ratio, subset = self._witness(blocks)
                report.add(
                    path,
                    "separation",
                    f"smallest cross distance {cross} < a * largest child diameter = {a} * {diameter}; "
                    f"closest witness has dr = {ratio}",
                    subset,
                )
        return report

    def _witness(self, blocks):
        """
        Among triples with two vectors in one child and one in another, the
        one of smallest ratio
        """
        best = None
        for r, block in enumerate(blocks):
            for x, y in combinations(block, 2):
                for s, other in enumerate(blocks):
                    if s == r:
                        continue
                    for z in other:
                        subset = tuple(sorted((int(x), int(y), int(z))))
                        ratio = self.subset_ratio(subset)
                        if best is None or ratio < best[0]:
                            best = (ratio, subset)
        return best
