import logging
from itertools import combinations

from scipy.special import comb

from ..counterexample import _CounterexampleCheck, DEFAULT_MAX_SUBSETS
from ...report import VerificationReport


class ExhaustiveCheck(_CounterexampleCheck):
    """
    Enumerate every subset of exactly q+1 vectors and confirm its distance
    ratio is at least a. Larger subsets follow because the ratio never
    decreases when vectors are added.
    """

    name = "exhaustive"

    def run(self, max_subsets=DEFAULT_MAX_SUBSETS, **kwargs):
        report = VerificationReport(name="counterexample (exhaustive)")
        m, k = len(self.family), self.params.q + 1
        if m < k:
            return report
        total = comb(m, k, exact=True)
        if total > max_subsets:
            raise ValueError(
                f"Exhaustive check needs C({m}, {k}) = {total} subsets, above the cap of {max_subsets}; "
                f"use the structural mode"
            )
        logging.info(f"Checking {total} subsets of size {k}")
        D = self.distances.tolist()
        a = self.params.a
        for subset in combinations(range(m), k):
            report.checked += 1
            lo, hi = None, 0
            for x, y in combinations(subset, 2):
                d = D[x][y]
                hi = max(hi, d)
                lo = d if lo is None else min(lo, d)
            if hi < a * lo:
                report.add((), "ratio", self.describe(subset), subset)
                break
        return report
