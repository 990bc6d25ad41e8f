"""Winograd's inner-product identity and Brent's power-of-two scaling."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from .matrix import Matrix, check_conformable, norm_inf, scalar_mul

UNIT_ROUNDOFF = 2.0 ** -53


@dataclass(frozen=True)
class WinogradPrecompute:
    y: np.ndarray
    z: np.ndarray
    gamma: int
    upsilon: bool


@dataclass(frozen=True)
class ScalingPlan:
    lam: int
    norm_a: float
    norm_b: float


@njit(cache=True)
def _row_col_factors(a, b):
    n, p = a.shape
    m = b.shape[1]
    gamma = p // 2
    y = np.empty(n)
    z = np.empty(m)
    for i in range(n):
        aux = 0.0
        for j in range(gamma):
            aux += a[i, 2 * j] * a[i, 2 * j + 1]
        y[i] = aux
    for k in range(m):
        aux = 0.0
        for j in range(gamma):
            aux += b[2 * j, k] * b[2 * j + 1, k]
        z[k] = aux
    return y, z


@njit(cache=True)
def _winograd(a, b):
    n, p = a.shape
    m = b.shape[1]
    gamma = p // 2
    odd = p % 2 == 1
    y, z = _row_col_factors(a, b)
    c = np.empty((n, m))
    for i in range(n):
        for k in range(m):
            aux = 0.0
            for j in range(gamma):
                aux += (a[i, 2 * j] + b[2 * j + 1, k]) * (a[i, 2 * j + 1] + b[2 * j, k])
            aux = aux - y[i]
            aux = aux - z[k]
            if odd:
                aux += a[i, p - 1] * b[p - 1, k]
            c[i, k] = aux
    return c


def winograd_precompute(A: Matrix, B: Matrix) -> WinogradPrecompute:
    """Row factors ``y`` of A and column factors ``z`` of B."""
    d = check_conformable(A, B)
    y, z = _row_col_factors(A.array, B.array)
    return WinogradPrecompute(y=y, z=z, gamma=d.p // 2, upsilon=d.p % 2 == 0)


def winograd_original(A: Matrix, B: Matrix) -> Matrix:
    """Product via pairwise cross terms minus precomputed row/column factors.

    Each entry is the left-to-right pair sum, then ``- y[i]``, then ``- z[k]``,
    then the trailing product when the inner dimension is odd.
    """
    check_conformable(A, B)
    return Matrix._wrap(_winograd(A.array, B.array))


def _round_half_away(x: float) -> int:
    return int(math.copysign(math.floor(abs(x) + 0.5), x))


def _log2(x: float) -> float:
    mant, exp = math.frexp(x)
    return exp + math.log2(mant)


def _in_bracket(norm_a: float, norm_b: float, lam: int) -> int:
    """-1 if the scaled ratio is below 1/2, +1 if above 2, else 0 (exact test)."""
    scaled = math.ldexp(norm_a, 2 * lam)
    if 2.0 * scaled < norm_b:
        return -1
    if scaled > 2.0 * norm_b:
        return 1
    return 0


def compute_scaling_exponent(norm_a: float, norm_b: float) -> ScalingPlan:
    """Choose ``lam`` so that ``1/2 <= 2**(2*lam) * norm_a / norm_b <= 2``.

    ``lam = round(log2(norm_b / norm_a) / 2)`` with halves rounded away from
    zero. The logarithm is taken from the binary exponents so extreme ratios
    never overflow; the result is then checked exactly against the bracket.
    """
    if norm_a < 0 or norm_b < 0:
        raise ValueError(f"norms must be non-negative, got {norm_a}, {norm_b}")
    if norm_a == 0 or norm_b == 0:
        return ScalingPlan(0, float(norm_a), float(norm_b))
    lam = _round_half_away((_log2(norm_b) - _log2(norm_a)) / 2.0)
    # log2 may be off by an ulp right at a bracket endpoint
    for _ in range(2):
        side = _in_bracket(norm_a, norm_b, lam)
        if side == 0:
            break
        lam -= side
    return ScalingPlan(lam, float(norm_a), float(norm_b))


def winograd_scaled(A: Matrix, B: Matrix) -> Matrix:
    """Winograd's method on ``(2**lam * A, 2**-lam * B)``; the product is unchanged."""
    check_conformable(A, B)
    plan = compute_scaling_exponent(norm_inf(A), norm_inf(B))
    As = scalar_mul(math.ldexp(1.0, plan.lam), A)
    Bs = scalar_mul(math.ldexp(1.0, -plan.lam), B)
    return Matrix._wrap(_winograd(As.array, Bs.array))


def winograd_error_bound(n: int, norm_a: float, norm_b: float,
                         u: float = UNIT_ROUNDOFF, scaled: bool = False) -> float:
    """Brent's a-priori bound on ``||E||`` for Winograd's method, order ``n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if u <= 0:
        raise ValueError("u must be positive")
    poly = n * n + 12 * n - 8
    if scaled:
        return u * 9.0 / 8.0 * poly * norm_a * norm_b
    return u * poly / 4.0 * (norm_a + norm_b) ** 2
