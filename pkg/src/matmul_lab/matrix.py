"""Dense row-major matrix value type and the auxiliary algebra the kernels use."""

from __future__ import annotations

import operator
import sys
from typing import Iterable, NamedTuple, Sequence

import numpy as np
from numba import njit


class ShapeError(ValueError):
    """Raised when matrix dimensions are invalid or do not conform."""


class Dims(NamedTuple):
    """Problem shape for ``A (n x p) * B (p x m)``."""

    n: int
    p: int
    m: int


class Matrix:
    """Immutable dense matrix of float64 entries stored row-major.

    Entry ``(i, j)`` lives at ``data[i * cols + j]``. The backing array is
    C-contiguous and marked read-only, so a Matrix can be shared freely.
    """

    __slots__ = ("_a",)

    def __init__(self, values) -> None:
        a = np.array(values, dtype=np.float64, order="C", copy=True)
        if a.ndim != 2:
            raise ShapeError(f"expected a 2-D array, got {a.ndim}-D")
        if a.shape[0] < 1 or a.shape[1] < 1:
            raise ShapeError(f"dimensions must be positive, got {a.shape}")
        a.flags.writeable = False
        self._a = a

    @classmethod
    def _wrap(cls, a: np.ndarray) -> "Matrix":
        # Takes ownership of a freshly computed array; no copy, no validation.
        if not a.flags.c_contiguous:
            a = np.ascontiguousarray(a)
        a.flags.writeable = False
        obj = cls.__new__(cls)
        obj._a = a
        return obj

    @classmethod
    def from_flat(cls, rows: int, cols: int, data: Iterable[float]) -> "Matrix":
        flat = np.fromiter(data, dtype=np.float64)
        if flat.size != rows * cols:
            raise ShapeError(f"data has {flat.size} entries, expected {rows}*{cols}")
        return cls(flat.reshape(rows, cols))

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def data(self) -> np.ndarray:
        """Flat read-only row-major view of the entries."""
        return self._a.reshape(-1)

    @property
    def array(self) -> np.ndarray:
        """Read-only 2-D view of the entries."""
        return self._a

    def __getitem__(self, idx: tuple[int, int]) -> float:
        i, j = idx
        return float(self._a[i, j])

    def tolist(self) -> list[list[float]]:
        return self._a.tolist()

    def bitwise_equal(self, other: "Matrix") -> bool:
        """True iff shapes match and every entry has the same bit pattern."""
        if self.shape != other.shape:
            return False
        return bool(np.array_equal(self._a.view(np.uint64), other._a.view(np.uint64)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._a, other._a))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, {self._a.tolist()!r})"


def _check_dim(name: str, value) -> int:
    try:
        v = operator.index(value)
    except TypeError:
        raise ShapeError(f"{name} must be an integer, got {value!r}") from None
    if v < 1:
        raise ShapeError(f"{name} must be >= 1, got {v}")
    return v


def mat_new(rows: int, cols: int, fill: float = 0.0) -> Matrix:
    rows = _check_dim("rows", rows)
    cols = _check_dim("cols", cols)
    if rows * cols > sys.maxsize // 8:
        raise ShapeError(f"{rows}x{cols} matrix is too large")
    return Matrix._wrap(np.full((rows, cols), float(fill), dtype=np.float64))


def zeros(rows: int, cols: int) -> Matrix:
    return mat_new(rows, cols, 0.0)


def identity(n: int) -> Matrix:
    n = _check_dim("n", n)
    return Matrix._wrap(np.eye(n, dtype=np.float64))


def from_rows(rows: Sequence[Sequence[float]]) -> Matrix:
    return Matrix(rows)


def _same_shape(A: Matrix, B: Matrix, op: str) -> None:
    if A.shape != B.shape:
        raise ShapeError(f"{op}: shape mismatch {A.shape} vs {B.shape}")


def plus(A: Matrix, B: Matrix) -> Matrix:
    _same_shape(A, B, "plus")
    return Matrix._wrap(A.array + B.array)


def minus(A: Matrix, B: Matrix) -> Matrix:
    _same_shape(A, B, "minus")
    return Matrix._wrap(A.array - B.array)


def scalar_mul(alpha: float, A: Matrix) -> Matrix:
    alpha = float(alpha)
    if not np.isfinite(alpha):
        raise ValueError(f"scalar must be finite, got {alpha}")
    return Matrix._wrap(alpha * A.array)


@njit(cache=True)
def _norm_inf(a):
    best = 0.0
    for i in range(a.shape[0]):
        s = 0.0
        for j in range(a.shape[1]):
            s += abs(a[i, j])
        if s > best:
            best = s
    return best


def norm_inf(A: Matrix) -> float:
    """Maximum absolute row sum; each row summed left to right, uncompensated."""
    return float(_norm_inf(A.array))


def max2(x, y):
    return x if x >= y else y


def check_conformable(A: Matrix, B: Matrix) -> Dims:
    if A.cols != B.rows:
        raise ShapeError(f"inner dimensions differ: {A.shape} * {B.shape}")
    return Dims(A.rows, A.cols, B.cols)
