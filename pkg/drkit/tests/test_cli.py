import contextlib
import io
import os
import tempfile
from unittest import TestCase

from drkit.cli import EXIT_ERROR, EXIT_OK, EXIT_VIOLATIONS, main
from drkit.core import VectorFamily, distance_stats
from drkit.oracle import random_family
from drkit.utils import load_family, manifest_from_text, read_text, save_family
from drkit.tests.families import mutated_family
from drkit.tests.test_formats import SMALL_FAMILY_TEXT, SMALL_PARAMS_TEXT

SMALL_ARGS = ["--alpha", "3/5", "--C", "3/2", "--lambda", "11/10"]


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        status = main(argv)
    return status, out.getvalue(), err.getvalue()


class TestCli(TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.family = self.path("small.hwf")

    def tearDown(self):
        self.tmp.cleanup()

    def path(self, name):
        return os.path.join(self.tmp.name, name)

    def construct(self):
        status, out, _ = run(["construct"] + SMALL_ARGS + ["--out", self.family])
        self.assertEqual(status, EXIT_OK)
        return out

    def test_construct(self):
        out = self.construct()
        self.assertIn("t=2 a=2 p=4 q=2 n=12", out)
        self.assertEqual(read_text(self.family), SMALL_FAMILY_TEXT)
        self.assertEqual(read_text(self.family + ".tree"), "((0 1) (2 3))\n")
        self.assertEqual(read_text(self.family + ".params"), SMALL_PARAMS_TEXT)
        manifest = manifest_from_text(read_text(self.family + ".manifest"))
        self.assertEqual(manifest["command"], "construct")
        self.assertIn("output.family", manifest)

    def test_construct_to_stdout(self):
        status, out, _ = run(["construct"] + SMALL_ARGS)
        self.assertEqual(status, EXIT_OK)
        self.assertTrue(out.endswith(SMALL_FAMILY_TEXT))

    def test_construct_limits(self):
        status, _, err = run(["construct", "--alpha", "1/100", "--C", "2", "--lambda", "3/2"])
        self.assertEqual(status, EXIT_ERROR)
        self.assertIn("exceed configured limits", err)

    def test_construct_bad_override(self):
        status, _, err = run(["construct"] + SMALL_ARGS + ["--n", "11"])
        self.assertEqual(status, EXIT_ERROR)
        self.assertIn("condition 4", err)

    def test_bad_rational(self):
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as ctx:
                main(["construct", "--alpha", "0.6", "--C", "3/2", "--lambda", "11/10"])
        self.assertEqual(ctx.exception.code, 2)

    def test_deterministic_artifacts(self):
        self.construct()
        first = {name: read_text(self.family + name) for name in ("", ".tree", ".params", ".manifest")}
        self.construct()
        second = {name: read_text(self.family + name) for name in ("", ".tree", ".params", ".manifest")}
        self.assertEqual(first, second)

    def test_extract(self):
        self.construct()
        out_path = self.path("subset.hwf")
        status, out, _ = run(["extract", "--C", "3", "--in", self.family, "--out", out_path])
        self.assertEqual(status, EXIT_OK)
        self.assertIn("t = 2", out)
        self.assertIn("|K'| = 4", out)
        self.assertIn("dr(K') = 2", out)
        self.assertIn("branch = net", out)
        self.assertEqual(read_text(out_path), SMALL_FAMILY_TEXT)
        self.assertTrue(read_text(out_path + ".cert").startswith("CERT 1\nkind=net\n"))

    def test_extract_singleton(self):
        save_family(self.family, VectorFamily.from_supports(12, [(1, 2, 3, 4)]))
        status, out, _ = run(["extract", "--C", "3", "--in", self.family])
        self.assertEqual(status, EXIT_OK)
        self.assertIn("|K'| = 1", out)
        self.assertIn("dr(K') = 1", out)

    def test_extract_domain(self):
        self.construct()
        status, _, err = run(["extract", "--C", "2", "--in", self.family])
        self.assertEqual(status, EXIT_ERROR)
        self.assertIn("C > 2", err)

    def test_verify(self):
        self.construct()
        argv = ["verify", "--in", self.family, "--tree", self.family + ".tree", "--params", self.family + ".params"]
        status, out, _ = run(argv + ["--counterexample", "exhaustive"])
        self.assertEqual(status, EXIT_OK)
        self.assertIn("stats: min=4 max=8 ratio=2/1", out)
        status, _, _ = run(argv + ["--counterexample", "structural"])
        self.assertEqual(status, EXIT_OK)

    def test_verify_mutated(self):
        self.construct()
        mutated = self.path("mutated.hwf")
        save_family(mutated, mutated_family())
        status, out, _ = run(
            ["verify", "--in", mutated, "--tree", self.family + ".tree", "--params", self.family + ".params"]
        )
        self.assertEqual(status, EXIT_VIOLATIONS)
        self.assertIn("cross", out)

    def test_verify_family_only(self):
        self.construct()
        status, out, _ = run(["verify", "--in", self.family])
        self.assertEqual(status, EXIT_OK)
        self.assertIn("stats:", out)

    def test_verify_usage_errors(self):
        self.construct()
        status, _, _ = run(["verify", "--in", self.family, "--tree", self.family + ".tree"])
        self.assertEqual(status, EXIT_ERROR)
        bad_tree = self.path("bad.tree")
        with open(bad_tree, "w") as f:
            f.write("((0 1) (2 2))\n")
        status, _, _ = run(["verify", "--in", self.family, "--tree", bad_tree, "--params", self.family + ".params"])
        self.assertEqual(status, EXIT_ERROR)

    def test_missing_file(self):
        status, _, _ = run(["verify", "--in", self.path("nowhere.hwf")])
        self.assertEqual(status, EXIT_ERROR)

    def test_oracle(self):
        self.construct()
        status, out, _ = run(["oracle", "--C", "3/2", "--in", self.family])
        self.assertEqual(status, EXIT_OK)
        self.assertIn("size=2", out)
        self.assertIn("not applicable", out)
        status, out, _ = run(["oracle", "--C", "3", "--in", self.family])
        self.assertIn("oracle dominates: True", out)

    def test_oracle_cap(self):
        save_family(self.family, random_family(20, 4, 12, seed=2))
        status, _, err = run(["oracle", "--C", "3", "--in", self.family, "--cap", "5"])
        self.assertEqual(status, EXIT_ERROR)
        self.assertIn("--cap", err)

    def test_pack(self):
        out_path = self.path("pack.hwf")
        status, out, _ = run(["pack", "--n", "16", "--p", "8", "--dmin", "4", "--out", out_path])
        self.assertEqual(status, EXIT_OK)
        self.assertIn("slice size 12870", out)
        self.assertIn("packing: 870 vectors", out)
        stats = distance_stats(load_family(out_path))
        self.assertGreaterEqual(stats.min_dist, 4)
        self.assertLessEqual(stats.ratio, 4)
        self.assertTrue(os.path.exists(out_path + ".manifest"))

    def test_pack_sample(self):
        status, out, _ = run(["pack", "--n", "20", "--p", "4", "--sample", "5,50"])
        self.assertEqual(status, EXIT_OK)
        self.assertIn("d_min = 2", out)

    def test_alpha_scan_empty(self):
        csv_path = self.path("scan.csv")
        status, _, _ = run(["alpha-scan", "--n", "12", "--p", "3", "--m", "6", "--C", "3", "--trials", "0", "--csv", csv_path])
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(read_text(csv_path), "trial,seed,m,method,size,exponent\n")

    def test_alpha_scan(self):
        csv_path = self.path("scan.csv")
        argv = ["alpha-scan", "--n", "16", "--p", "4", "--m", "10", "--C", "3", "--trials", "3", "--seed", "4"]
        status, _, _ = run(argv + ["--csv", csv_path])
        self.assertEqual(status, EXIT_OK)
        lines = read_text(csv_path).splitlines()
        self.assertEqual(len(lines), 4)
        self.assertTrue(lines[1].startswith("0,4,10,oracle,"))
        self.assertTrue(lines[3].startswith("2,6,10,oracle,"))
        first = read_text(csv_path)
        run(argv + ["--csv", csv_path])
        self.assertEqual(read_text(csv_path), first)

    def test_alpha_scan_above_cap(self):
        csv_path = self.path("scan.csv")
        status, _, _ = run(
            ["alpha-scan", "--n", "16", "--p", "4", "--m", "10", "--C", "3", "--trials", "1", "--cap", "5", "--csv", csv_path]
        )
        self.assertEqual(status, EXIT_OK)
        self.assertIn(",extract,", read_text(csv_path))

    def test_replay(self):
        self.construct()
        status, out, _ = run(["replay", self.family + ".manifest"])
        self.assertEqual(status, EXIT_OK)
        self.assertIn("3/3 outputs identical", out)

    def test_replay_changed_input(self):
        self.construct()
        out_path = self.path("subset.hwf")
        run(["extract", "--C", "3", "--in", self.family, "--out", out_path])
        status, out, _ = run(["replay", out_path + ".manifest"])
        self.assertEqual(status, EXIT_OK)
        self.assertIn("2/2 outputs identical", out)
        save_family(self.family, mutated_family())
        status, out, _ = run(["replay", out_path + ".manifest"])
        self.assertEqual(status, EXIT_VIOLATIONS)
        self.assertIn("input.family differs", out)
        self.assertNotIn("outputs identical", out)

    def test_manifest_rationals(self):
        self.construct()
        manifest = manifest_from_text(read_text(self.family + ".manifest"))
        self.assertEqual(manifest["param.alpha"], "3/5")
        self.assertEqual(manifest["param.lam"], "11/10")
        out_path = self.path("subset.hwf")
        run(["extract", "--C", "3", "--in", self.family, "--out", out_path])
        manifest = manifest_from_text(read_text(out_path + ".manifest"))
        self.assertEqual(manifest["param.C"], "3/1")


class TestAlphaScanScript(TestCase):
    def test_single_vector_families_refused(self):
        from experiments.alpha_scan import main as scan_main

        err = io.StringIO()
        with contextlib.redirect_stderr(err):
            with self.assertRaises(SystemExit) as ctx:
                scan_main(["--n", "12", "--p", "3", "--m", "1", "--C", "3", "--trials", "1"])
        self.assertEqual(ctx.exception.code, 2)
        self.assertIn("--m must be at least 2", err.getvalue())
