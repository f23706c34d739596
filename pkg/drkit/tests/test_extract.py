from dataclasses import replace
from fractions import Fraction
from unittest import TestCase

from hypothesis import given, strategies as st

from drkit.core import VectorFamily, distance_ratio
from drkit.extract import (
    BALL,
    NET,
    ExtractParams,
    ball,
    build_chain,
    chain_coverage,
    compute_depth,
    extract_subset,
    greedy_separated,
    threshold,
    validate_certificate,
)
from drkit.oracle import random_family
from drkit.tests.families import A1_SUPPORTS
from drkit.tests.settings import STANDARD
from drkit.utils import certificate_from_text, certificate_to_text

DEPTH_CS = [Fraction(21, 10), Fraction(5, 2), Fraction(3), Fraction(4), Fraction(8)]


class TestDepth(TestCase):
    def test_examples(self):
        self.assertEqual(compute_depth(4, 3), (2, Fraction(1, 2)))
        self.assertEqual(compute_depth(2, 3), (1, Fraction(1)))
        self.assertEqual(compute_depth(64, 4), (5, Fraction(1, 5)))

    def test_domain(self):
        with self.assertRaises(ValueError):
            compute_depth(4, 2)
        with self.assertRaises(ValueError):
            compute_depth(4, Fraction(3, 2))

    def test_boundary(self):
        for C in DEPTH_CS:
            for p in range(1, 129):
                t, alpha = compute_depth(p, C)
                self.assertEqual(alpha, Fraction(1, t))
                self.assertGreaterEqual((C / 2) ** t, Fraction(p, 2))
                if t >= 2:
                    self.assertLess((C / 2) ** (t - 1), Fraction(p, 2))

    def test_thresholds(self):
        self.assertEqual(threshold(3, 1), 3)
        self.assertEqual(threshold(3, 2), Fraction(9, 2))
        params = ExtractParams.for_weight(8, Fraction(5, 2))
        self.assertEqual(params.t, 7)
        self.assertEqual(len(params.thresholds), 6)
        self.assertEqual(params.threshold(2), Fraction(25, 8))
        for i in range(1, params.t):
            self.assertEqual(params.threshold(i), threshold(Fraction(5, 2), i))


class TestPrimitives(TestCase):
    def setUp(self):
        self.K = VectorFamily.from_supports(12, A1_SUPPORTS)

    def test_greedy_separated(self):
        self.assertEqual(greedy_separated(self.K, 3), self.K)
        self.assertEqual(greedy_separated(self.K, 5).supports(), [A1_SUPPORTS[0], A1_SUPPORTS[2]])
        self.assertEqual(len(greedy_separated(self.K, 9)), 1)
        with self.assertRaises(ValueError):
            greedy_separated(self.K, 0)

    def test_ball(self):
        self.assertEqual(ball(self.K, 0, 4).supports(), A1_SUPPORTS[:2])
        self.assertEqual(ball(self.K, 0, Fraction(7, 2)).supports(), A1_SUPPORTS[:1])
        self.assertEqual(ball(self.K, 3, 8), self.K)
        with self.assertRaises(ValueError):
            ball(self.K, 4, 4)

    def test_chain(self):
        chain = build_chain(self.K, 3)
        self.assertEqual(chain, [[0, 1, 2, 3], [0, 1, 2, 3]])
        self.assertTrue(chain_coverage(self.K, chain[0], chain[1], 3))
        self.assertFalse(chain_coverage(self.K, [0, 1, 2, 3], [0], 4))
        self.assertTrue(chain_coverage(self.K, [0, 1, 2, 3], [0, 2], 4))


class TestExtract(TestCase):
    def setUp(self):
        self.K = VectorFamily.from_supports(12, A1_SUPPORTS)

    def test_small_family(self):
        subset, cert = extract_subset(self.K, 3)
        self.assertEqual(cert.t, 2)
        self.assertEqual(cert.kind, NET)
        self.assertEqual(cert.chain_sizes, (4, 4))
        self.assertEqual(subset, self.K)
        self.assertEqual(distance_ratio(subset), 2)
        self.assertGreaterEqual(len(subset) ** cert.t, len(self.K))
        self.assertTrue(validate_certificate(self.K, 3, cert, subset).ok)

    def test_singleton(self):
        K = self.K.subset([0])
        subset, cert = extract_subset(K, 3)
        self.assertEqual(len(subset), 1)
        self.assertEqual(distance_ratio(subset), 1)

    def test_domain(self):
        with self.assertRaises(ValueError):
            extract_subset(self.K, 2)
        with self.assertRaises(ValueError):
            extract_subset(self.K.subset([]), 3)

    def test_ball_branch(self):
        # 20 vectors sharing three coordinates sit within distance 2 of each
        # other, so the first ball already holds the whole family
        K = VectorFamily.from_supports(30, [(1, 2, 3, c) for c in range(4, 24)])
        subset, cert = extract_subset(K, 3)
        self.assertEqual(cert.kind, BALL)
        self.assertEqual(cert.level, 1)
        self.assertEqual(cert.center, 0)
        self.assertEqual(subset, K)
        self.assertTrue(validate_certificate(K, 3, cert, subset).ok)

    def test_deterministic(self):
        K = random_family(24, 6, 40, seed=5)
        self.assertEqual(extract_subset(K, 3), extract_subset(K, 3))

    def test_deep_chain_near_two(self):
        # thresholds for C just above 2 carry tens of thousands of digits
        K = random_family(300, 128, 4, seed=1)
        C = Fraction(2001, 1000)
        with self.assertLogs(level="DEBUG") as logs:
            subset, cert = extract_subset(K, C)
        self.assertEqual(cert.t, 8320)
        self.assertTrue(any("threshold ~2^" in line for line in logs.output))
        self.assertLessEqual(distance_ratio(subset), C)
        self.assertGreaterEqual(len(subset) ** cert.t, len(K))
        text = certificate_to_text(cert)
        self.assertIn("\nthreshold=", text)
        self.assertEqual(certificate_from_text(text), cert)


class TestCertificate(TestCase):
    def setUp(self):
        self.K = random_family(32, 6, 40, seed=3)
        self.C = Fraction(5, 2)
        self.subset, self.cert = extract_subset(self.K, self.C)

    def test_valid(self):
        self.assertTrue(validate_certificate(self.K, self.C, self.cert, self.subset).ok)

    def test_dropped_index(self):
        cert = replace(self.cert, subset=self.cert.subset[:-1])
        report = validate_certificate(self.K, self.C, cert, self.K.subset(cert.subset))
        self.assertFalse(report.ok)

    def test_wrong_output(self):
        other = self.K.subset(range(len(self.subset)))
        if other != self.subset:
            self.assertFalse(validate_certificate(self.K, self.C, self.cert, other).ok)

    def test_out_of_range_index(self):
        cert = replace(self.cert, subset=(len(self.K),))
        report = validate_certificate(self.K, self.C, cert, self.subset)
        self.assertIn("subset", [v.clause for v in report.violations])

    def test_wrong_domain(self):
        report = validate_certificate(self.K, 2, self.cert, self.subset)
        self.assertEqual([v.clause for v in report.violations], ["domain"])


class TestExtractProperties(TestCase):
    @STANDARD
    @given(
        seed=st.integers(0, 2 ** 32),
        n=st.sampled_from([24, 32]),
        p=st.sampled_from([4, 6, 8]),
        m=st.integers(1, 60),
        C=st.sampled_from([Fraction(5, 2), Fraction(3), Fraction(4)]),
    )
    def test_guarantees(self, seed, n, p, m, C):
        K = random_family(n, p, m, seed)
        subset, cert = extract_subset(K, C)
        self.assertLessEqual(distance_ratio(subset), C)
        self.assertGreaterEqual(len(subset) ** cert.t, len(K))
        self.assertTrue(validate_certificate(K, C, cert, subset).ok)

        chain = build_chain(K, C)
        for i in range(1, len(chain)):
            self.assertTrue(chain_coverage(K, chain[i - 1], chain[i], threshold(C, i)))
