"""Command line front end.

Every subcommand writes CSV (default) or JSON to ``--out`` (``-`` for stdout).
Exit status: 0 success, 2 bad arguments, 3 I/O or table-format problems.

    zetamap estimate --n-from 1 --n-to 100
    zetamap solve --n 1 --delta 0.0921796
    zetamap solve --n-from 1 --n-to 50 --auto-delta
    zetamap dcrt --r 99691 --k-max 1000 --zeros file:zeros.txt --n-zeros 10000
    zetamap orbit --n 100000 --delta 2 --iters 500
    zetamap bifurcation --n 100 --delta-from 0 --delta-to 2.5 --steps 250
    zetamap compare --computed est.csv --reference zeros.txt
    zetamap residual --zeros zeros.txt --limit 100 --sigma-offset 1e-6
"""
import argparse
import io
import logging
import sys

from . import __version__
from .dcrt import (
    ESTIMATOR_ZEROS,
    MAP_ZEROS,
    PERTURBED,
    REFERENCE_TABLE,
    perturb_zeros,
    scan_factors,
    truncate_digits,
)
from .dynamics import (
    DEFAULT_SAMPLES,
    DEFAULT_TRANSIENT,
    ESCAPED,
    bifurcation_scan,
    first_bifurcation_delta,
    orbit,
)
from .errors import DomainError, NotFoundError, TableFormatError, ZetamapError
from .output import write_table
from .reference_data import compare_zeros, load_zero_table, table_estimates
from .zeros import estimate_zero, exact_residual, solve_zero

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3

log = logging.getLogger("zetamap")


class UsageError(Exception):
    pass


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _nonneg_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return value


def _t0(text):
    if text == "estimate":
        return text
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("t0 must be positive or 'estimate'")
    return value


def _add_output(p):
    p.add_argument("--out", default="-", help="output path, '-' for stdout (default)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")


def _n_range(args):
    if args.n is not None:
        if args.n_from is not None or args.n_to is not None:
            raise UsageError("use either --n or --n-from/--n-to")
        return range(args.n, args.n + 1)
    if args.n_from is None or args.n_to is None:
        raise UsageError("need --n or both --n-from and --n-to")
    if args.n_from > args.n_to:
        raise UsageError("--n-from must not exceed --n-to")
    return range(args.n_from, args.n_to + 1)


def _start(n, t0):
    return estimate_zero(n).t if t0 == "estimate" else t0


def cmd_estimate(args):
    if args.n_from > args.n_to:
        raise UsageError("--n-from must not exceed --n-to")
    rows = [(n, estimate_zero(n).t) for n in range(args.n_from, args.n_to + 1)]
    return ["n", "t_hat"], rows, None


def cmd_solve(args):
    rows = []
    for n in _n_range(args):
        if args.auto_delta:
            delta = first_bifurcation_delta(n, delta_max=args.delta_max)
        else:
            delta = args.delta
        est = solve_zero(n, delta, k_iters=args.iters, t0=_start(n, args.t0), step_tol=args.step_tol)
        t = est.t
        if args.truncate_digits is not None:
            t = truncate_digits([t], args.truncate_digits)[0]
        rows.append((n, t, est.delta, est.iterations, est.converged, est.final_step))
    return ["n", "t", "delta", "iterations", "converged", "final_step"], rows, None


def _dcrt_zeros(args):
    choice = args.zeros
    if choice.startswith("file:"):
        table = load_zero_table(choice[len("file:"):])
        values = list(table.values)
        if args.n_zeros is not None:
            if args.n_zeros > len(values):
                raise UsageError("--n-zeros %d exceeds the %d zeros in the table" % (args.n_zeros, len(values)))
            values = values[:args.n_zeros]
        source = REFERENCE_TABLE
    elif choice in ("estimate", "solve"):
        if args.n_zeros is None:
            raise UsageError("--zeros %s needs --n-zeros" % choice)
        if choice == "estimate":
            values = [estimate_zero(n).t for n in range(1, args.n_zeros + 1)]
            source = ESTIMATOR_ZEROS
        else:
            values = []
            for n in range(1, args.n_zeros + 1):
                delta = args.delta if args.delta is not None else first_bifurcation_delta(n)
                values.append(solve_zero(n, delta, k_iters=args.iters).t)
                if n % 500 == 0:
                    log.info("solved %d / %d zeros", n, args.n_zeros)
            source = MAP_ZEROS
    else:
        raise UsageError("--zeros must be file:PATH, solve or estimate")
    if args.truncate_digits is not None:
        values = truncate_digits(values, args.truncate_digits)
    if args.perturb is not None:
        values = perturb_zeros(values, args.perturb, args.seed)
        source = PERTURBED
    return values, source


def cmd_dcrt(args):
    if args.r < 2 or args.k_max < 2:
        raise UsageError("--r and --k-max must both be >= 2")
    values, source = _dcrt_zeros(args)
    scan = scan_factors(args.r, values, args.k_max, ratio=args.ratio, zero_source=source)
    spectrum = scan.spectrum
    lo, hi = scan.window
    xs = spectrum.normalized() if args.normalize else spectrum.x_values
    rows = [(k, x) for k, x in zip(spectrum.k_values, xs) if lo <= k <= hi]
    footer = {
        "r": args.r,
        "n_zeros": spectrum.n_zeros,
        "zero_source": source,
        "normalized": bool(args.normalize),
        "ratio": float(args.ratio),
        "peaks": [k for k, _ in scan.peaks if lo <= k <= hi],
        "divisors": scan.divisors,
    }
    return ["k", "X"], rows, footer


def cmd_orbit(args):
    if args.transient >= args.iters:
        raise UsageError("--transient must be smaller than --iters")
    rec = orbit(args.n, args.delta, args.iters, args.transient, t0=_start(args.n, args.t0))
    rows = list(enumerate(rec.iterates))
    footer = {
        "n": args.n,
        "delta": float(args.delta),
        "classification": rec.classification,
        "period": rec.period,
        "escaped_at": rec.escaped_at,
    }
    return ["iteration", "t"], rows, footer


def cmd_bifurcation(args):
    if not args.delta_from < args.delta_to:
        raise UsageError("--delta-from must be smaller than --delta-to")
    if args.steps < 2:
        raise UsageError("--steps must be >= 2")
    if args.transient >= args.iters:
        raise UsageError("--transient must be smaller than --iters")
    samples = min(args.samples, args.iters - args.transient)
    scan = bifurcation_scan(args.n, args.delta_from, args.delta_to, args.steps,
                            total_iters=args.iters, transient=args.transient,
                            samples_per_delta=samples, t0=_start(args.n, args.t0))
    rows = []
    for delta, values, cls in zip(scan.delta_grid, scan.attractor_samples, scan.classifications):
        if cls == ESCAPED:
            rows.append((delta, None, cls))
        for v in values:
            rows.append((delta, v, cls))
    return ["delta", "sample_value", "classification"], rows, {"n": args.n}


def cmd_compare(args):
    computed = load_zero_table(args.computed)
    reference = load_zero_table(args.reference)
    try:
        stats = compare_zeros(table_estimates(computed), reference)
    except IndexError as exc:
        raise UsageError(str(exc))
    rows = [
        (n, reference.zero(n) + d, reference.zero(n), d)
        for n, d in zip(stats.indices, stats.per_n_diff)
    ]
    footer = {
        "count": stats.count,
        "max_abs_diff": stats.max_abs_diff,
        "rms_diff": stats.rms_diff,
        "sign_changes": stats.sign_changes,
    }
    return ["n", "computed", "reference", "diff"], rows, footer


def cmd_residual(args):
    table = load_zero_table(args.zeros)
    count = len(table) if args.limit is None else min(args.limit, len(table))
    rows = []
    for i in range(count):
        n = table.first_index + i
        t = table.values[i]
        rows.append((n, t, exact_residual(t, n, args.sigma_offset)))
    worst = max(abs(r[2]) for r in rows)
    return ["n", "t", "residual"], rows, {"max_abs_residual": worst}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="zetamap",
        description="Riemann zeta zeros from a Lambert-W fixed-point map, DCRT factoring and map dynamics.",
    )
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    parser.add_argument("-v", "--verbose", action="store_true", help="progress messages on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("estimate", help="closed-form Lambert W estimates t_hat(n)")
    p.add_argument("--n-from", type=_positive_int, required=True)
    p.add_argument("--n-to", type=_positive_int, required=True)
    _add_output(p)
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("solve", help="iterate the damped map for one or more zeros")
    p.add_argument("--n", type=_positive_int)
    p.add_argument("--n-from", type=_positive_int)
    p.add_argument("--n-to", type=_positive_int)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--delta", type=float)
    mode.add_argument("--auto-delta", action="store_true",
                      help="use the first-bifurcation delta for each n")
    p.add_argument("--delta-max", type=float, default=1.0, help="search bound for --auto-delta")
    p.add_argument("--iters", type=_positive_int, default=20)
    p.add_argument("--t0", type=_t0, default=1.0, help="start value, or 'estimate'")
    p.add_argument("--step-tol", type=float, default=1e-10)
    p.add_argument("--truncate-digits", type=_nonneg_int)
    _add_output(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("dcrt", help="DCRT spectrum of cos(log(r) t) and divisor spikes")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k-max", type=int, default=1000)
    p.add_argument("--zeros", default="estimate", help="file:PATH, solve or estimate")
    p.add_argument("--n-zeros", type=_positive_int)
    p.add_argument("--delta", type=float, help="fixed delta for --zeros solve (default: first bifurcation per n)")
    p.add_argument("--iters", type=_positive_int, default=20)
    p.add_argument("--perturb", type=float, metavar="EPS")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--normalize", action="store_true", help="divide X(k) by the number of zeros")
    p.add_argument("--ratio", type=float, default=5.0)
    p.add_argument("--truncate-digits", type=_nonneg_int)
    _add_output(p)
    p.set_defaults(func=cmd_dcrt)

    p = sub.add_parser("orbit", help="one orbit of the map with its classification")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--iters", type=_positive_int, default=500)
    p.add_argument("--transient", type=_nonneg_int, default=DEFAULT_TRANSIENT)
    p.add_argument("--t0", type=_t0, default=1.0)
    _add_output(p)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("bifurcation", help="attractor samples over a delta grid")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--delta-from", type=float, required=True)
    p.add_argument("--delta-to", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--iters", type=_positive_int, default=DEFAULT_TRANSIENT + DEFAULT_SAMPLES)
    p.add_argument("--transient", type=_nonneg_int, default=DEFAULT_TRANSIENT)
    p.add_argument("--samples", type=_positive_int, default=DEFAULT_SAMPLES)
    p.add_argument("--t0", type=_t0, default=1.0)
    _add_output(p)
    p.set_defaults(func=cmd_bifurcation)

    p = sub.add_parser("compare", help="computed zeros minus reference zeros")
    p.add_argument("--computed", required=True)
    p.add_argument("--reference", required=True)
    _add_output(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("residual", help="phase-equation residual at tabulated zeros")
    p.add_argument("--zeros", required=True)
    p.add_argument("--sigma-offset", type=float, default=1e-6)
    p.add_argument("--limit", type=_positive_int, help="only the first LIMIT zeros")
    _add_output(p)
    p.set_defaults(func=cmd_residual)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        columns, rows, footer = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (OSError, TableFormatError) as exc:
        print("zetamap: %s" % exc, file=sys.stderr)
        return EXIT_IO
    except (DomainError, NotFoundError) as exc:
        print("zetamap: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except ZetamapError as exc:
        print("zetamap: %s" % exc, file=sys.stderr)
        return EXIT_USAGE

    buf = io.StringIO()
    write_table(buf, args.format, columns, rows, footer)
    text = buf.getvalue()
    try:
        if args.out == "-":
            sys.stdout.write(text)
            sys.stdout.flush()
        else:
            with open(args.out, "w") as fh:
                fh.write(text)
    except OSError as exc:
        print("zetamap: %s" % exc, file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
