"""Timing and stability benchmark: ``C = A * (8A)`` for every method.

Matrices come from numpy's PCG64 generator seeded through ``SeedSequence``;
PCG64 output and ``Generator.random`` are stable across platforms, so the
same ``(order, seed)`` always yields the same matrix and the same deviation
column. Only the timings vary between runs.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .matrix import Matrix, minus, norm_inf, scalar_mul
from .methods import KERNELS, REFERENCE, MethodId

DEFAULT_ORDER = 400
DEFAULT_REPEATS = 10
DEFAULT_SEED = 42
FORMATS = ("table", "csv", "json")


@dataclass(frozen=True)
class BenchConfig:
    order: int = DEFAULT_ORDER
    repeats: int = DEFAULT_REPEATS
    seed: int = DEFAULT_SEED
    methods: tuple[MethodId, ...] = tuple(MethodId)
    format: str = "table"

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be >= 1")
        if self.repeats < 1:
            raise ValueError("repeats must be >= 1")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")
        if not self.methods:
            raise ValueError("at least one method is required")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        object.__setattr__(self, "methods", tuple(MethodId(m) for m in self.methods))


@dataclass(frozen=True)
class MethodResult:
    method: MethodId
    seconds: float
    deviation: float | None


@dataclass
class BenchReport:
    order: int
    repeats: int
    seed: int
    results: list[MethodResult] = field(default_factory=list)

    def get(self, method: MethodId | str) -> MethodResult:
        method = MethodId(method)
        for r in self.results:
            if r.method is method:
                return r
        raise KeyError(method)

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "repeats": self.repeats,
            "seed": self.seed,
            "results": [
                {"method": r.method.value, "seconds": r.seconds, "deviation": r.deviation}
                for r in self.results
            ],
        }


def gen_random_matrix(n: int, seed: int) -> Matrix:
    """``n x n`` matrix of i.i.d. uniform [0, 1) entries from PCG64(seed)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    return Matrix._wrap(rng.random((n, n), dtype=np.float64))


def warm_up(methods: Iterable[MethodId] = tuple(MethodId)) -> None:
    """Trigger JIT compilation so it never lands inside a timed call."""
    tiny = Matrix([[1.0, 2.0, 3.0], [4.0, 5.0, 6.0], [7.0, 8.0, 9.0]])
    for m in methods:
        KERNELS[m](tiny, tiny)
    norm_inf(tiny)


def _time_kernel(kernel, A: Matrix, B: Matrix, repeats: int) -> tuple[float, Matrix]:
    total = 0.0
    C = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        C = kernel(A, B)
        total += time.perf_counter() - t0
    return total / repeats, C


def run_bench(config: BenchConfig) -> BenchReport:
    """Run every requested method ``repeats`` times on ``A`` and ``B = 8A``.

    NaivKahan always runs first and its product is the reference ``N``; each
    other method reports ``norm_inf(N - C)`` for its last product.
    """
    requested = set(config.methods)
    order = [m for m in MethodId if m in requested or m is REFERENCE]
    warm_up(order)

    A = gen_random_matrix(config.order, config.seed)
    B = scalar_mul(8.0, A)

    ref_seconds, reference = _time_kernel(KERNELS[REFERENCE], A, B, config.repeats)
    report = BenchReport(config.order, config.repeats, config.seed)
    for method in order:
        if method is REFERENCE:
            report.results.append(MethodResult(method, ref_seconds, None))
            continue
        seconds, C = _time_kernel(KERNELS[method], A, B, config.repeats)
        report.results.append(MethodResult(method, seconds, norm_inf(minus(reference, C))))
    return report


_RULE = "+" + "-" * 71 + "+"
_TITLE = "TIME TEST FOR METHODS OF MATRIX MULTIPLICATION"


def render_table(report: BenchReport) -> str:
    lines = [
        _RULE,
        "|" + " " * 12 + _TITLE + " " * 13 + "|",
        "|" + " " * 71 + "|",
        f"| C = A*(8A), where A is a (n x n) random matrix with n = {report.order:10d}    |",
        _RULE,
        f"| {'method':<27} | {'time (sec)':>16} | {'NormInf( N-C )':>20} |",
        _RULE,
    ]
    for r in report.results:
        if r.deviation is None:
            label = f"N := {r.method.value}" if r.method is REFERENCE else r.method.value
            dev = ""
        else:
            label = r.method.value
            dev = f"{r.deviation:.10f}"
        lines.append(f"| {label:<27} | {r.seconds:16.6f} | {dev:>20} |")
    lines.append(_RULE)
    return "\n".join(lines) + "\n"


def render_csv(report: BenchReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["method", "seconds", "deviation"])
    for r in report.results:
        w.writerow([r.method.value, repr(r.seconds),
                    "" if r.deviation is None else repr(r.deviation)])
    return buf.getvalue()


def render_json(report: BenchReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


RENDERERS = {"table": render_table, "csv": render_csv, "json": render_json}


def render(report: BenchReport, fmt: str = "table") -> str:
    return RENDERERS[fmt](report)


def parse_methods(names: str | Sequence[str]) -> tuple[MethodId, ...]:
    if isinstance(names, str):
        names = names.split(",")
    out = tuple(MethodId.parse(n) for n in names if n.strip())
    if not out:
        raise ValueError("empty method list")
    return out
