import argparse
import logging
import os
import sys

from . import report as rp


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lebnagell", description="Solve and verify x^2 + 2^a 3^b 11^c = y^n.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--out", help="write the JSON report here instead of stdout")
        return p

    p = add("verify-tables", "check the shipped tables against the exhaustive search")
    p.add_argument("--quick", action="store_true", help="n=3 search only up to y=10^4")
    p.add_argument("--workers", type=_positive, default=os.cpu_count() or 1)

    p = add("enumerate", "list all solutions for one exponent")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--y-max", type=int, required=True)
    p.add_argument("--require-bc-positive", action="store_true")
    p.add_argument("--workers", type=_positive, default=os.cpu_count() or 1)

    p = add("smooth-scan", "solution counts for {2,3}-smooth exponents")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--y-max", type=int, required=True)

    p = add("reduce", "elliptic model of an exponent triple")
    p.add_argument("--n", type=int, choices=(3, 4), required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--x", type=int)
    p.add_argument("--y", type=int)

    p = add("lucas", "case analysis for prime exponent p = 5")
    p.add_argument("--d", type=int, choices=(2, 6), required=True)
    p.add_argument("--box", type=_positive, default=1000)
    return ap


def run(args) -> "rp.RunReport":
    if args.command == "verify-tables":
        return rp.cmd_verify_tables(quick=args.quick, workers=args.workers)
    if args.command == "enumerate":
        return rp.cmd_enumerate(args.n, args.y_max, args.require_bc_positive, args.workers)
    if args.command == "smooth-scan":
        return rp.cmd_smooth_scan(args.n_max, args.y_max)
    if args.command == "reduce":
        return rp.cmd_reduce(args.n, args.a, args.b, args.c, args.x, args.y)
    if args.command == "lucas":
        return rp.cmd_lucas(args.d, args.box)
    raise AssertionError(args.command)


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        report = run(args)
    except ValueError as exc:
        print(f"lebnagell: error: {exc}", file=sys.stderr)
        return rp.EXIT_USAGE
    text = report.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(report.summary(), file=sys.stderr)
    return report.exit_status


if __name__ == "__main__":
    sys.exit(main())
