"""
Sweep the weight p for fixed (n, m, C): sample random families, record the
largest bounded-ratio subset found (exact oracle within the cap, extraction
above it) and plot the observed exponent ln|K'| / ln|K| against the
guaranteed 1/t of subset extraction.

    python -m experiments.alpha_scan --n 24 --p 4 6 8 --m 12 --C 5/2 --trials 10 --log scan
"""
import argparse
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from drkit.cli import alpha_scan_rows
from drkit.extract import compute_depth
from drkit.utils import parse_rational
from experiments.utils import COLORS, Logger, format_plt


def build_parser():
    parser = argparse.ArgumentParser(description="Empirical exponent sweep over p")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--p", type=int, nargs="+", required=True)
    parser.add_argument("--m", type=int, required=True)
    parser.add_argument("--C", type=parse_rational, required=True)
    parser.add_argument("--trials", type=int, default=10)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--cap", type=int, default=None)
    parser.add_argument("--log", default="alpha_scan")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.m < 2:
        parser.error("--m must be at least 2")

    logger = Logger(args)
    observed = defaultdict(list)
    guaranteed = {}
    for p in args.p:
        t, alpha = compute_depth(p, args.C)
        guaranteed[p] = float(alpha)
        for row in alpha_scan_rows(args.n, p, args.m, args.C, args.trials, args.seed, cap=args.cap):
            logger.log(p, t, row)
            observed[p].append(float(row["exponent"]))
        print(f"p={p}: t={t}, mean exponent {np.mean(observed[p]):.4f}, guaranteed {guaranteed[p]:.4f}")

    ps = sorted(observed)
    fig, ax = plt.subplots(figsize=(5, 3.5))
    means = [np.mean(observed[p]) for p in ps]
    spread = [np.std(observed[p]) for p in ps]
    ax.errorbar(ps, means, yerr=spread, color=COLORS[1], marker="o", label="observed")
    ax.step(ps, [guaranteed[p] for p in ps], where="mid", color=COLORS[5], label="guaranteed 1/t")
    format_plt(ax, f"n={args.n}, m={args.m}, C={args.C}", "weight p", "exponent")
    plt.legend(frameon=False)
    plt.tight_layout()
    plt.savefig(logger.filename.replace(".csv", ".pdf"))


if __name__ == "__main__":
    main()
