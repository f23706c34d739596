"""
Command line surface of drkit.

Exit codes: 0 success or verified, 1 verification found violations,
2 usage, domain or limit errors.
"""
import argparse
import csv
import io
import logging
import shlex
import sys
from fractions import Fraction

from . import __version__
from .construct import (
    DEFAULT_MAX_DIMENSION,
    DEFAULT_MAX_FAMILY_SIZE,
    DEFAULT_MAX_SUBSETS,
    build_cis,
    solve_params,
    verify_cis,
    verify_counterexample,
)
from .construct.params import OVERRIDABLE
from .core import distance_ratio, distance_stats
from .extract import extract_subset
from .oracle import best_subset_bruteforce, brute_force_cap, exponent, random_family
from .packing import PackingParams, default_dmin, greedy_packing, meets_size_floor, slice_size
from .utils import (
    atomic_write_text,
    certificate_to_text,
    family_to_text,
    format_rational,
    load_family,
    manifest_from_text,
    manifest_to_text,
    params_from_text,
    params_to_text,
    parse_rational,
    read_text,
    save_family,
    sha256_file,
    tree_from_text,
    tree_to_text,
)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_ERROR = 2

ALPHA_SCAN_FIELDS = ["trial", "seed", "m", "method", "size", "exponent"]


class _Manifest:
    """
    Collects what a run needs to be replayed: the argument vector, the
    parameters and the digests of every input and output file.
    """

    def __init__(self, command, argv):
        self.items = [("tool", f"drkit {__version__}"), ("command", command), ("argv", shlex.join(argv))]

    def param(self, name, value):
        if isinstance(value, Fraction):
            value = format_rational(value)
        self.items.append((f"param.{name}", value))

    def input(self, name, path):
        self.items.append((f"input.{name}", f"{path} {sha256_file(path)}"))

    def output(self, name, path):
        self.items.append((f"output.{name}", f"{path} {sha256_file(path)}"))

    def write(self, path):
        atomic_write_text(path, manifest_to_text(self.items))


def _write(path, text, manifest, name):
    atomic_write_text(path, text)
    manifest.output(name, path)


def cmd_construct(args, argv):
    overrides = {k: getattr(args, k) for k in OVERRIDABLE}
    params = solve_params(
        args.alpha,
        args.C,
        args.lam,
        max_family_size=args.max_family_size,
        max_dimension=args.max_dimension,
        overrides=overrides,
    )
    family, tree = build_cis(params)
    print(f"params: {params}")
    print(f"family: {len(family)} vectors of weight {family.weight} in dimension {family.dimension}")
    if args.out is None:
        sys.stdout.write(family_to_text(family))
        return EXIT_OK

    manifest = _Manifest("construct", argv)
    for name in ("alpha", "C", "lam"):
        manifest.param(name, getattr(args, name))
    manifest.param("resolved", str(params))
    _write(args.out, family_to_text(family), manifest, "family")
    _write(args.tree or args.out + ".tree", tree_to_text(tree), manifest, "tree")
    _write(args.params or args.out + ".params", params_to_text(params), manifest, "params")
    manifest.write(args.manifest or args.out + ".manifest")
    return EXIT_OK


def cmd_extract(args, argv):
    K = load_family(args.input)
    subset, cert = extract_subset(K, args.C)
    print(f"|K| = {len(K)}")
    print(f"t = {cert.t}")
    print(f"|K'| = {len(subset)}")
    print(f"dr(K') = {distance_ratio(subset)}")
    print(f"branch = {cert.kind} (level {cert.level})")
    if args.out is None:
        return EXIT_OK

    manifest = _Manifest("extract", argv)
    manifest.param("C", args.C)
    manifest.input("family", args.input)
    _write(args.out, family_to_text(subset), manifest, "subset")
    _write(args.cert or args.out + ".cert", certificate_to_text(cert), manifest, "certificate")
    manifest.write(args.manifest or args.out + ".manifest")
    return EXIT_OK


def cmd_verify(args, argv):
    K = load_family(args.input)
    if len(K) >= 2:
        print(f"stats: {distance_stats(K)}")
    else:
        print("stats: fewer than two vectors, ratio 1")

    if args.params is None:
        if args.tree is not None or args.counterexample is not None:
            raise ValueError("--tree and --counterexample need --params")
        return EXIT_OK

    params = params_from_text(read_text(args.params))
    tree = tree_from_text(read_text(args.tree)) if args.tree is not None else None
    reports = []
    if tree is not None:
        reports.append(verify_cis(K, tree, params))
    if args.counterexample is not None:
        reports.append(
            verify_counterexample(K, tree, params, mode=args.counterexample, max_subsets=args.max_subsets)
        )
    for report in reports:
        print("\n".join(report.lines()))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_VIOLATIONS


def cmd_oracle(args, argv):
    K = load_family(args.input)
    result = best_subset_bruteforce(K, args.C, cap=args.cap)
    print(f"oracle: {result}")
    if args.C > 2 and len(K) > 0:
        subset, cert = extract_subset(K, args.C)
        print(f"extract: size={len(subset)} ratio={distance_ratio(subset)} branch={cert.kind}")
        print(f"oracle dominates: {len(subset) <= result.size}")
    else:
        print("extract: not applicable, subset extraction requires C > 2")
    return EXIT_OK


def cmd_pack(args, argv):
    d_min = args.dmin if args.dmin is not None else default_dmin(args.p)
    params = PackingParams(n=args.n, p=args.p, d_min=d_min, sample=args.sample)
    family = greedy_packing(params)
    total = slice_size(args.n, args.p)
    print(f"packing: {len(family)} vectors, d_min = {params.d_min}, slice size {total}")
    if len(family) >= 2:
        stats = distance_stats(family)
        print(f"stats: {stats}")
    print(f"size floor |P| >= |slice|^beta: {meets_size_floor(len(family), total)}")
    if args.out is None:
        return EXIT_OK

    manifest = _Manifest("pack", argv)
    manifest.param("d_min", params.d_min)
    manifest.param("enumeration", params.enumeration)
    _write(args.out, family_to_text(family), manifest, "family")
    manifest.write(args.manifest or args.out + ".manifest")
    return EXIT_OK


def alpha_scan_rows(n, p, m, C, trials, seed, cap=None):
    """
    One row per trial: the oracle size when m is within the brute-force cap,
    the extracted size otherwise
    """
    cap = brute_force_cap(cap)
    for trial in range(trials):
        trial_seed = seed + trial
        K = random_family(n, p, m, trial_seed)
        if m <= cap:
            method, size = "oracle", best_subset_bruteforce(K, C, cap=cap).size
        else:
            method, size = "extract", len(extract_subset(K, C)[0])
        yield {
            "trial": trial,
            "seed": trial_seed,
            "m": m,
            "method": method,
            "size": size,
            "exponent": exponent(size, m) if m >= 2 else "",
        }


def cmd_alpha_scan(args, argv):
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=ALPHA_SCAN_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in alpha_scan_rows(args.n, args.p, args.m, args.C, args.trials, args.seed, cap=args.cap):
        writer.writerow(row)
        logging.info(f"trial {row['trial']}: {row['method']} size {row['size']}")

    manifest = _Manifest("alpha-scan", argv)
    manifest.param("seed", args.seed)
    manifest.param("trials", args.trials)
    _write(args.csv, buffer.getvalue(), manifest, "csv")
    manifest.write(args.manifest or args.csv + ".manifest")
    print(f"alpha-scan: {args.trials} trial(s) written to {args.csv}")
    return EXIT_OK


def cmd_replay(args, argv):
    """
    Re-run the command recorded in a manifest and compare output digests.
    Inputs are checked first; a run over changed inputs is not replayed.
    """
    recorded = manifest_from_text(read_text(args.manifest_file))
    changed = _mismatched_digests(recorded, "input.")
    if len(changed) > 0:
        for key in changed:
            print(f"replay: {key} differs from the recorded digest")
        print("replay: inputs changed since the recorded run, nothing re-run")
        return EXIT_VIOLATIONS
    outputs = [k for k in recorded if k.startswith("output.")]
    status = main(shlex.split(recorded["argv"]))
    if status != EXIT_OK:
        return status
    mismatched = _mismatched_digests(recorded, "output.")
    for key in mismatched:
        print(f"replay: {key} differs from the recorded digest")
    print(f"replay: {len(outputs) - len(mismatched)}/{len(outputs)} outputs identical")
    return EXIT_OK if len(mismatched) == 0 else EXIT_VIOLATIONS


def _mismatched_digests(recorded, prefix):
    mismatched = []
    for key, value in recorded.items():
        if key.startswith(prefix):
            path, digest = value.rsplit(" ", 1)
            if sha256_file(path) != digest:
                mismatched.append(key)
    return mismatched


def _sample(text):
    seed, sep, count = text.partition(",")
    if sep == "":
        raise argparse.ArgumentTypeError("expected SEED,COUNT")
    return int(seed), int(count)


def build_parser():
    parser = argparse.ArgumentParser(prog="drkit", description="Distance-ratio toolkit for constant-weight codes")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    parser.add_argument("--version", action="version", version=f"drkit {__version__}")
    sub = parser.add_subparsers(dest="cmd")
    sub.required = True

    p_construct = sub.add_parser("construct", help="Build the recursive counterexample family")
    p_construct.add_argument("--alpha", type=parse_rational, required=True)
    p_construct.add_argument("--C", type=parse_rational, required=True)
    p_construct.add_argument("--lambda", dest="lam", type=parse_rational, required=True)
    for name in OVERRIDABLE:
        p_construct.add_argument(f"--{name}", type=int, default=None)
    p_construct.add_argument("--out", default=None)
    p_construct.add_argument("--tree", default=None)
    p_construct.add_argument("--params", default=None)
    p_construct.add_argument("--max-family-size", type=int, default=DEFAULT_MAX_FAMILY_SIZE)
    p_construct.add_argument("--max-dimension", type=int, default=DEFAULT_MAX_DIMENSION)
    p_construct.set_defaults(func=cmd_construct)

    p_extract = sub.add_parser("extract", help="Extract a subset of bounded distance ratio")
    p_extract.add_argument("--C", type=parse_rational, required=True)
    p_extract.add_argument("--in", dest="input", required=True)
    p_extract.add_argument("--out", default=None)
    p_extract.add_argument("--cert", default=None)
    p_extract.set_defaults(func=cmd_extract)

    p_verify = sub.add_parser("verify", help="Distance statistics and structural checks")
    p_verify.add_argument("--in", dest="input", required=True)
    p_verify.add_argument("--tree", default=None)
    p_verify.add_argument("--params", default=None)
    p_verify.add_argument("--counterexample", choices=["structural", "exhaustive"], default=None)
    p_verify.add_argument("--max-subsets", type=int, default=DEFAULT_MAX_SUBSETS)
    p_verify.set_defaults(func=cmd_verify)

    p_oracle = sub.add_parser("oracle", help="Exact largest subset of bounded ratio")
    p_oracle.add_argument("--C", type=parse_rational, required=True)
    p_oracle.add_argument("--in", dest="input", required=True)
    p_oracle.add_argument("--cap", type=int, default=None)
    p_oracle.set_defaults(func=cmd_oracle)

    p_pack = sub.add_parser("pack", help="Greedy packing of the weight-p slice")
    p_pack.add_argument("--n", type=int, required=True)
    p_pack.add_argument("--p", type=int, required=True)
    p_pack.add_argument("--dmin", type=int, default=None)
    p_pack.add_argument("--sample", type=_sample, default=None, metavar="SEED,COUNT")
    p_pack.add_argument("--out", default=None)
    p_pack.set_defaults(func=cmd_pack)

    p_scan = sub.add_parser("alpha-scan", help="Sample the largest bounded-ratio subset of random families")
    p_scan.add_argument("--n", type=int, required=True)
    p_scan.add_argument("--p", type=int, required=True)
    p_scan.add_argument("--m", type=int, required=True)
    p_scan.add_argument("--C", type=parse_rational, required=True)
    p_scan.add_argument("--trials", type=int, default=1)
    p_scan.add_argument("--seed", type=int, default=0)
    p_scan.add_argument("--csv", required=True)
    p_scan.add_argument("--cap", type=int, default=None)
    p_scan.set_defaults(func=cmd_alpha_scan)

    p_replay = sub.add_parser("replay", help="Re-run a manifest and compare output digests")
    p_replay.add_argument("manifest_file")
    p_replay.set_defaults(func=cmd_replay)

    for p in (p_construct, p_extract, p_pack, p_scan):
        p.add_argument("--manifest", default=None)
    return parser


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=[logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)])
    try:
        return args.func(args, argv)
    except (ValueError, RuntimeError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
