"""Triple-loop multiplication kernels.

All loops run in strict IEEE order: the numba functions are compiled without
fastmath, so no reassociation or multiply-add contraction takes place. The
Kahan update in particular is meaningless once reassociated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .matrix import Matrix, check_conformable


@dataclass(frozen=True)
class KahanAccumulator:
    sum: float = 0.0
    err: float = 0.0
    t: float = 0.0


def kahan_absorb(acc: KahanAccumulator, x: float) -> KahanAccumulator:
    """Fold ``x`` into the compensated sum using the four-step update."""
    s = acc.sum
    err = acc.err + x
    t = s + err
    err = (s - t) + err
    return KahanAccumulator(sum=t, err=err, t=t)


def kahan_sum(xs) -> float:
    acc = KahanAccumulator()
    for x in xs:
        acc = kahan_absorb(acc, float(x))
    return acc.sum


@njit(cache=True)
def _naive_standard(a, b):
    n, p = a.shape
    m = b.shape[1]
    c = np.empty((n, m))
    for i in range(n):
        for j in range(m):
            aux = 0.0
            for k in range(p):
                aux += a[i, k] * b[k, j]
            c[i, j] = aux
    return c


@njit(cache=True)
def _naive_on_array(a, b):
    n, p = a.shape
    m = b.shape[1]
    c = np.zeros((n, m))
    for i in range(n):
        for j in range(m):
            for k in range(p):
                c[i, j] += a[i, k] * b[k, j]
    return c


@njit(cache=True)
def _naive_kahan(a, b):
    n, p = a.shape
    m = b.shape[1]
    c = np.empty((n, m))
    for i in range(n):
        for j in range(m):
            s = 0.0
            err = 0.0
            for k in range(p):
                err = err + a[i, k] * b[k, j]
                t = s + err
                err = (s - t) + err
                s = t
            c[i, j] = s
    return c


@njit(cache=True)
def _unroll_two(a, b):
    n, p = a.shape
    m = b.shape[1]
    c = np.empty((n, m))
    full = p - p % 2
    for i in range(n):
        for j in range(m):
            aux = 0.0
            for k in range(0, full, 2):
                aux += a[i, k] * b[k, j] + a[i, k + 1] * b[k + 1, j]
            if full < p:
                aux += a[i, p - 1] * b[p - 1, j]
            c[i, j] = aux
    return c


@njit(cache=True)
def _unroll_three(a, b):
    n, p = a.shape
    m = b.shape[1]
    c = np.empty((n, m))
    full = p - p % 3
    for i in range(n):
        for j in range(m):
            aux = 0.0
            for k in range(0, full, 3):
                aux += (a[i, k] * b[k, j] + a[i, k + 1] * b[k + 1, j]
                        + a[i, k + 2] * b[k + 2, j])
            for k in range(full, p):
                aux += a[i, k] * b[k, j]
            c[i, j] = aux
    return c


@njit(cache=True)
def _unroll_four(a, b):
    n, p = a.shape
    m = b.shape[1]
    c = np.empty((n, m))
    full = p - p % 4
    for i in range(n):
        for j in range(m):
            aux = 0.0
            for k in range(0, full, 4):
                aux += (a[i, k] * b[k, j] + a[i, k + 1] * b[k + 1, j]
                        + a[i, k + 2] * b[k + 2, j] + a[i, k + 3] * b[k + 3, j])
            for k in range(full, p):
                aux += a[i, k] * b[k, j]
            c[i, j] = aux
    return c


def naive_standard(A: Matrix, B: Matrix) -> Matrix:
    """Definitional product, each entry accumulated in a local scalar."""
    check_conformable(A, B)
    return Matrix._wrap(_naive_standard(A.array, B.array))


def naive_on_array(A: Matrix, B: Matrix) -> Matrix:
    """Definitional product accumulated directly into the zeroed output."""
    check_conformable(A, B)
    return Matrix._wrap(_naive_on_array(A.array, B.array))


def naive_kahan(A: Matrix, B: Matrix) -> Matrix:
    """Definitional product with each inner sum compensated (see kahan_absorb)."""
    check_conformable(A, B)
    return Matrix._wrap(_naive_kahan(A.array, B.array))


def unroll_two(A: Matrix, B: Matrix) -> Matrix:
    check_conformable(A, B)
    return Matrix._wrap(_unroll_two(A.array, B.array))


def unroll_three(A: Matrix, B: Matrix) -> Matrix:
    check_conformable(A, B)
    return Matrix._wrap(_unroll_three(A.array, B.array))


def unroll_four(A: Matrix, B: Matrix) -> Matrix:
    """Four products grouped per iteration; the ``p % 4`` leftovers follow in order."""
    check_conformable(A, B)
    return Matrix._wrap(_unroll_four(A.array, B.array))
