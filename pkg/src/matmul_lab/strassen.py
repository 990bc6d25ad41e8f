"""Strassen's 7-product recursion and the 15-addition Strassen-Winograd schedule.

Arbitrary ``N x P`` by ``P x M`` problems are embedded with zero rows and
columns into order ``Y = m * 2**k``, recursed ``k`` levels down to blocks of
order ``m`` that are multiplied by a base kernel, and the ``N x M`` corner is
extracted from the result.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .matrix import Dims, Matrix, ShapeError, check_conformable
from .naive import _naive_standard, naive_standard

Kernel = Callable[[Matrix, Matrix], Matrix]


@dataclass(frozen=True)
class PaddingPlan:
    max_size: int
    k: int
    m: int
    new_size: int


@dataclass
class OpCounter:
    """Instrumentation for the recursions.

    ``multiplications`` counts base-kernel calls. ``additions`` maps the
    remaining depth of a recursion node to the block additions/subtractions it
    performed, summed over all nodes at that depth; ``nodes`` counts the nodes.
    """

    multiplications: int = 0
    additions: Counter = field(default_factory=Counter)
    nodes: Counter = field(default_factory=Counter)

    def per_node(self, depth: int) -> float:
        return self.additions[depth] / self.nodes[depth]


def padding_plan(dims: Dims) -> PaddingPlan:
    x = max(dims)
    if min(dims) < 1:
        raise ShapeError(f"dimensions must be positive, got {tuple(dims)}")
    k = max(0, x.bit_length() - 1 - 4)
    m = (x >> k) + 1
    return PaddingPlan(max_size=x, k=k, m=m, new_size=m << k)


def embed(A: Matrix, size: int) -> Matrix:
    """``size x size`` matrix with A in the top-left corner and zeros elsewhere."""
    if size < max(A.rows, A.cols):
        raise ShapeError(f"cannot embed {A.shape} into order {size}")
    if A.shape == (size, size):
        return A
    out = np.zeros((size, size))
    out[: A.rows, : A.cols] = A.array
    return Matrix._wrap(out)


def extract(C: Matrix, n: int, m: int) -> Matrix:
    """Top-left ``n x m`` block of C."""
    if not (1 <= n <= C.rows and 1 <= m <= C.cols):
        raise ShapeError(f"cannot extract {n}x{m} from {C.shape}")
    if (n, m) == C.shape:
        return C
    return Matrix._wrap(C.array[:n, :m].copy())


def _split(a: np.ndarray):
    h = a.shape[0] // 2
    return (a[:h, :h].copy(), a[:h, h:].copy(), a[h:, :h].copy(), a[h:, h:].copy())


def _join(c11, c12, c21, c22) -> np.ndarray:
    h = c11.shape[0]
    c = np.empty((2 * h, 2 * h))
    c[:h, :h] = c11
    c[:h, h:] = c12
    c[h:, :h] = c21
    c[h:, h:] = c22
    return c


def _check_square(A: Matrix, B: Matrix, depth: int) -> None:
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if A.rows != A.cols or B.shape != A.shape:
        raise ShapeError(f"need equal square operands, got {A.shape} and {B.shape}")
    if A.rows % (1 << depth):
        raise ShapeError(f"order {A.rows} is not divisible by 2**{depth}")


class _Recursion:
    def __init__(self, base: Kernel, counter: OpCounter | None):
        self.base = base
        self.counter = counter

    def mul(self, a: np.ndarray, b: np.ndarray, depth: int) -> np.ndarray:
        if self.counter is not None:
            self.counter.multiplications += 1
        if self.base is naive_standard:
            return _naive_standard(a, b)
        return self.base(Matrix._wrap(a), Matrix._wrap(b)).array

    def add(self, depth: int, n: int) -> None:
        if self.counter is not None:
            self.counter.additions[depth] += n
            self.counter.nodes[depth] += 1


class _Strassen(_Recursion):
    def __call__(self, a, b, depth):
        if depth == 0:
            return self.mul(a, b, depth)
        a11, a12, a21, a22 = _split(a)
        b11, b12, b21, b22 = _split(b)
        d = depth - 1
        h1 = self(a11 + a22, b11 + b22, d)
        h2 = self(a21 + a22, b11, d)
        h3 = self(a11, b12 - b22, d)
        h4 = self(a22, b21 - b11, d)
        h5 = self(a11 + a12, b22, d)
        h6 = self(a21 - a11, b11 + b12, d)
        h7 = self(a12 - a22, b21 + b22, d)
        c11 = ((h1 + h4) - h5) + h7
        c12 = h3 + h5
        c21 = h2 + h4
        c22 = ((h1 + h3) - h2) + h6
        self.add(depth, 18)
        return _join(c11, c12, c21, c22)


class _StrassenWinograd(_Recursion):
    def __call__(self, a, b, depth):
        if depth == 0:
            return self.mul(a, b, depth)
        a11, a12, a21, a22 = _split(a)
        b11, b12, b21, b22 = _split(b)
        d = depth - 1
        a1 = a11 - a21
        b1 = b22 - b12
        a2 = a22 - a1
        b2 = b1 + b11
        h1 = self(a11, b11, d)
        h2 = self(a12, b21, d)
        h3 = self(a2, b2, d)
        h4 = self(a21 + a22, b12 - b11, d)
        h5 = self(a1, b1, d)
        h6 = self(a12 - a2, b22, d)
        h7 = self(a22, b21 - b2, d)
        h8 = h1 + h3
        h9 = h8 + h4
        c11 = h1 + h2
        c12 = h9 + h6
        c21 = (h8 + h5) + h7
        c22 = h9 + h5
        self.add(depth, 15)
        return _join(c11, c12, c21, c22)


def strassen_recursive(A: Matrix, B: Matrix, depth: int,
                       base: Kernel = naive_standard,
                       counter: OpCounter | None = None) -> Matrix:
    """Strassen's seven-product recursion ``depth`` levels deep on square operands."""
    _check_square(A, B, depth)
    return Matrix._wrap(_Strassen(base, counter)(A.array, B.array, depth))


def strassen_winograd_recursive(A: Matrix, B: Matrix, depth: int,
                                base: Kernel = naive_standard,
                                counter: OpCounter | None = None) -> Matrix:
    """Same contract as :func:`strassen_recursive`, with 15 block additions per level."""
    _check_square(A, B, depth)
    return Matrix._wrap(_StrassenWinograd(base, counter)(A.array, B.array, depth))


def _padded(recursion, A: Matrix, B: Matrix, base: Kernel,
            counter: OpCounter | None) -> Matrix:
    dims = check_conformable(A, B)
    plan = padding_plan(dims)
    C = recursion(embed(A, plan.new_size), embed(B, plan.new_size), plan.k, base, counter)
    return extract(C, dims.n, dims.m)


def strassen_naive(A: Matrix, B: Matrix, base: Kernel = naive_standard,
                   counter: OpCounter | None = None) -> Matrix:
    return _padded(strassen_recursive, A, B, base, counter)


def strassen_winograd(A: Matrix, B: Matrix, base: Kernel = naive_standard,
                      counter: OpCounter | None = None) -> Matrix:
    return _padded(strassen_winograd_recursive, A, B, base, counter)
