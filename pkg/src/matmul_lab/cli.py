"""Command line entry point: ``matmul-bench -O 400 -R 10``."""

from __future__ import annotations

import argparse
import sys

from .bench import (DEFAULT_ORDER, DEFAULT_REPEATS, DEFAULT_SEED, FORMATS,
                    BenchConfig, parse_methods, render, run_bench)
from .methods import MethodId


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _seed(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an unsigned 64-bit integer, got {text!r}")
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError(f"seed out of range: {value}")
    return value


def _methods(text: str):
    try:
        return parse_methods(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="matmul-bench",
        description="Time every matrix multiplication method on C = A*(8A) for a random "
                    "n x n matrix A and report NormInf(N - C) against the NaivKahan "
                    "product N.",
        epilog="time (sec) is the mean wall-clock time of one multiplication over the "
               "R repeats, measured around the kernel call only. Methods: "
               + ", ".join(m.value for m in MethodId),
    )
    p.add_argument("-O", dest="order", type=_positive_int, default=DEFAULT_ORDER,
                   metavar="N", help=f"matrix size (default {DEFAULT_ORDER})")
    p.add_argument("-R", dest="repeats", type=_positive_int, default=DEFAULT_REPEATS,
                   metavar="R", help=f"number of repeats (default {DEFAULT_REPEATS})")
    p.add_argument("--seed", type=_seed, default=DEFAULT_SEED,
                   help=f"PCG64 seed for the random matrix (default {DEFAULT_SEED})")
    p.add_argument("--format", choices=FORMATS, default="table")
    p.add_argument("--methods", type=_methods, default=tuple(MethodId),
                   metavar="LIST", help="comma-separated subset of methods (default all)")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    config = BenchConfig(order=args.order, repeats=args.repeats, seed=args.seed,
                         methods=args.methods, format=args.format)
    sys.stdout.write(render(run_bench(config), config.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
