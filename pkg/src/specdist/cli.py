"""Command-line front end: spectrum, dist, verify and scan subcommands.

Exit codes: 0 success, 1 verification failure or scan tolerance exceeded,
2 invalid arguments or graph order, 3 internal inconsistency between the
direct and closed sigma paths.  The SPECTRA_TOL environment variable
overrides the scan acceptance tolerance.
"""

import argparse
import os
import sys

import numpy as np

from . import distance, graphs, limits, spectra
from .errors import OrderTooSmallError, ResidueMismatchError
from .graphs import Family, FamilySpec

CONSISTENCY_TOL = 1e-9
ORACLE_TOL = 1e-8
ADDITIVITY_TOL = 1e-9
SYMMETRY_TOL = 1e-9

# default scan acceptance tolerances on |extrapolated - target|
SCAN_TOL = {"pz": 1e-3, "wz": 1e-3, "cz": 1e-3, "pw": 2e-3}

_FAMILY_MIN = {"p": 1, "c": 3, "z": 4, "w": 6}


def _parse_range(text):
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f'range must look like "a..b", got {text!r}')
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _values_line(values):
    return ",".join(f"{v:.17g}" for v in values)


def run_spectrum(args):
    if args.graph_file:
        with open(args.graph_file, encoding="utf-8") as fh:
            g = graphs.from_edge_list_text(fh.read())
        values = spectra.numeric_spectrum(graphs.adjacency_matrix(g))
        closed = None
        label = f"graph-file n={g.n}"
    else:
        if args.family is None or args.n is None:
            print("spectrum requires --family and --n (or --graph-file)", file=sys.stderr)
            return 2
        spec = FamilySpec(Family(args.family), args.n)
        label = f"{args.family} n={args.n}"
        closed = spectra.closed_spectrum(spec)
        if args.source == "closed":
            values = closed
        else:
            m = graphs.adjacency_matrix(graphs.build_family(spec))
            values = spectra.numeric_spectrum(m)

    if args.source == "both" and closed is not None:
        deviation = spectra.spectrum_deviation(closed, values)
        if args.format == "json":
            text = (
                f'{{"spectrum": "{label}", "closed": [{_values_line(closed)}], '
                f'"numeric": [{_values_line(values)}], "deviation": {deviation:.17g}}}\n'
            )
        else:
            text = (
                f"closed  {_values_line(closed)}\n"
                f"numeric {_values_line(values)}\n"
                f"deviation {deviation:.17g}\n"
            )
        _emit(text, args.out)
        return 0

    if args.format == "csv":
        text = spectra.spectrum_to_csv(values)
    elif args.format == "json":
        text = f'{{"spectrum": "{label}", "values": [{_values_line(values)}]}}\n'
    else:
        text = "\n".join(f"{v:.17g}" for v in values) + "\n"
    _emit(text, args.out)
    return 0


def run_dist(args):
    report = distance.distance_report(args.pair, args.n)
    direct = report.sigma
    lines = []
    status = 0
    if args.mode in ("closed", "both"):
        closed = distance.sigma_closed(args.pair, args.n)
    if args.mode == "both":
        residual = abs(direct - closed)
        if residual > CONSISTENCY_TOL:
            status = 3
    if args.format == "json":
        _emit(report.to_json() + "\n", args.out)
    else:
        if args.mode in ("direct", "both"):
            lines.append(f"sigma_direct {direct:.17g}")
        if args.mode in ("closed", "both"):
            lines.append(f"sigma_closed {closed:.17g}")
        if args.mode == "both":
            lines.append(f"residual {residual:.17g}")
        if report.matches_proof is not None:
            lines.append(f"pattern_matches_proof {report.matches_proof}")
        _emit("\n".join(lines) + "\n", args.out)
    if status == 3:
        print(
            f"error: direct/closed residual {residual:.3g} exceeds {CONSISTENCY_TOL:g}",
            file=sys.stderr,
        )
    return status


def _verify_interlacing(pair, lo, hi):
    minimum = distance.pair_min_order(pair)
    checked = 0
    for n in range(max(lo, minimum), hi + 1):
        if pair == "cz" and n % 2 != 0:
            continue
        report = distance.interlace_pattern(pair, n)
        if not report.matches_proof:
            expected = distance.expected_pattern_codes(pair, n)
            observed = report.pattern
            for i, code in enumerate(expected):
                if observed[i] != distance._CODE_NAMES[int(code)]:
                    return checked, (n, i + 1)
        checked += 1
    return checked, None


def run_verify(args):
    lo, hi = args.n
    if args.check == "interlacing":
        if args.pair is None or args.pair == "pw":
            print("interlacing requires --pair pz, wz or cz", file=sys.stderr)
            return 2
        checked, failure = _verify_interlacing(args.pair, lo, hi)
        if failure:
            n, idx = failure
            print(f"FAIL interlacing {args.pair}: n={n} index={idx}")
            return 1
        print(f"PASS interlacing {args.pair}: {checked} orders checked")
        return 0

    if args.check == "additivity":
        worst = 0.0
        checked = 0
        for n in range(max(lo, 6), hi + 1):
            residual = distance.check_additivity(n)
            worst = max(worst, residual)
            if residual >= ADDITIVITY_TOL:
                print(f"FAIL additivity: n={n} residual={residual:.3g}")
                return 1
            checked += 1
        print(f"PASS additivity: {checked} orders checked, max residual {worst:.3g}")
        return 0

    if args.check == "oracle":
        worst = 0.0
        checked = 0
        for code, minimum in _FAMILY_MIN.items():
            for n in range(max(lo, minimum), hi + 1):
                spec = FamilySpec(Family(code), n)
                closed = spectra.closed_spectrum(spec)
                numeric = spectra.numeric_spectrum(
                    graphs.adjacency_matrix(graphs.build_family(spec))
                )
                dev = spectra.spectrum_deviation(closed, numeric)
                worst = max(worst, dev)
                if dev >= ORACLE_TOL:
                    print(f"FAIL oracle: family={code} n={n} deviation={dev:.3g}")
                    return 1
                checked += 1
        print(f"PASS oracle: {checked} spectra checked, max deviation {worst:.3g}")
        return 0

    # bipartite-symmetry: p, z, w at every order; c at even orders
    worst = 0.0
    checked = 0
    for code, minimum in _FAMILY_MIN.items():
        for n in range(max(lo, minimum), hi + 1):
            if code == "c" and n % 2 != 0:
                continue
            values = spectra.closed_spectrum(FamilySpec(Family(code), n))
            asym = float(np.max(np.abs(values + values[::-1])))
            worst = max(worst, asym)
            if asym >= SYMMETRY_TOL:
                print(f"FAIL bipartite-symmetry: family={code} n={n} asymmetry={asym:.3g}")
                return 1
            checked += 1
    print(f"PASS bipartite-symmetry: {checked} spectra checked, max asymmetry {worst:.3g}")
    return 0


def run_scan(args):
    tol = SCAN_TOL[args.pair]
    env_tol = os.environ.get("SPECTRA_TOL")
    if env_tol:
        tol = float(env_tol)
    if args.pair != "cz" and args.residue is None:
        print(f"pair {args.pair} requires --residue 0..3", file=sys.stderr)
        return 2
    try:
        estimate = limits.sequence_scan(
            args.pair,
            residue=args.residue,
            n_max=args.n_max,
            compensated=args.compensated,
        )
    except (ValueError, ResidueMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        _emit(estimate.to_json() + "\n", args.out)
    else:
        _emit(estimate.to_csv(), args.out)
    if args.out or args.format != "json":
        print(estimate.to_json())
    if estimate.abs_error > tol:
        print(
            f"FAIL scan {args.pair}: abs_error {estimate.abs_error:.3g} > tolerance {tol:g}"
        )
        return 1
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="specdist",
        description="Spectral distances between paths, cycles and snake trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="Eigenvalues of a family member")
    sp.add_argument("--family", choices=["p", "c", "z", "w"])
    sp.add_argument("--n", type=int)
    sp.add_argument("--source", choices=["closed", "numeric", "both"], default="closed")
    sp.add_argument("--graph-file", help="edge-list file for the numeric oracle")
    sp.add_argument("--format", choices=["text", "csv", "json"], default="text")
    sp.add_argument("--out")
    sp.set_defaults(func=run_spectrum)

    dp = sub.add_parser("dist", help="Spectral distance of a pair at order n")
    dp.add_argument("--pair", choices=["pz", "wz", "pw", "cz"], required=True)
    dp.add_argument("--n", type=int, required=True)
    dp.add_argument("--mode", choices=["direct", "closed", "both"], default="direct")
    dp.add_argument("--format", choices=["text", "json"], default="text")
    dp.add_argument("--out")
    dp.set_defaults(func=run_dist)

    vp = sub.add_parser("verify", help="Run a verification suite over a range")
    vp.add_argument(
        "--check",
        choices=["interlacing", "additivity", "oracle", "bipartite-symmetry"],
        required=True,
    )
    vp.add_argument("--pair", choices=["pz", "wz", "cz"])
    vp.add_argument("--n", type=_parse_range, required=True, help='inclusive range "a..b"')
    vp.set_defaults(func=run_verify)

    cp = sub.add_parser("scan", help="Scan a sigma sequence and extrapolate its limit")
    cp.add_argument("--pair", choices=["pz", "wz", "pw", "cz"], required=True)
    cp.add_argument("--residue", type=int, choices=[0, 1, 2, 3])
    cp.add_argument("--n-max", type=int, default=limits.DEFAULT_N_MAX)
    cp.add_argument("--compensated", action="store_true", help="sum with math.fsum")
    cp.add_argument("--format", choices=["csv", "json"], default="csv")
    cp.add_argument("--out")
    cp.set_defaults(func=run_scan)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OrderTooSmallError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
