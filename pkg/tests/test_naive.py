import math

import numpy as np
import pytest

from matmul_lab import (KahanAccumulator, Matrix, ShapeError, identity, kahan_absorb,
                        kahan_sum, naive_kahan, naive_on_array, naive_standard, norm_inf,
                        unroll_four, unroll_three, unroll_two)
from helpers import int_matrix, rand_matrix, shapes
from oracles import bits, exact_matmul, fraction_matmul, py_matmul

NAIVE = [naive_standard, naive_on_array, naive_kahan, unroll_two, unroll_three, unroll_four]
ids = [k.__name__ for k in NAIVE]

A2 = Matrix([[1, 2], [3, 4]])
B2 = Matrix([[5, 6], [7, 8]])


@pytest.mark.parametrize("kernel", NAIVE, ids=ids)
def test_two_by_two(kernel):
    assert kernel(A2, B2).tolist() == [[19, 22], [43, 50]]


@pytest.mark.parametrize("kernel", NAIVE, ids=ids)
def test_shape_error(kernel):
    with pytest.raises(ShapeError):
        kernel(Matrix([[1, 2, 3]]), Matrix([[1, 2]]))


@pytest.mark.parametrize("kernel", NAIVE, ids=ids)
def test_small_dot_products(kernel):
    assert kernel(Matrix([[1, 2, 3]]), Matrix([[4], [5], [6]])).tolist() == [[32]]
    assert kernel(Matrix([[3]]), Matrix([[4]])).tolist() == [[12]]
    assert kernel(Matrix([[1, 1, 1, 1]]), Matrix([[1], [2], [3], [4]])).tolist() == [[10]]


@pytest.mark.parametrize("kernel", NAIVE, ids=ids)
def test_output_shape(kernel, rng):
    for n, p, m in shapes(rng, 10, 1, 9):
        assert kernel(rand_matrix(rng, n, p), rand_matrix(rng, p, m)).shape == (n, m)


@pytest.mark.parametrize("kernel", NAIVE, ids=ids)
@pytest.mark.parametrize("p", [1, 2, 3, 4, 5, 6, 7, 8, 11])
def test_identity_absorption(kernel, p, rng):
    A = rand_matrix(rng, 5, p)
    assert kernel(A, identity(p)).bitwise_equal(A)


@pytest.mark.parametrize("kernel", NAIVE, ids=ids)
@pytest.mark.parametrize("p", [4, 5, 7, 12, 13])
def test_integer_exact_against_exact_oracle(kernel, p, rng):
    A = int_matrix(rng, 6, p)
    B = int_matrix(rng, p, 4)
    assert np.array_equal(kernel(A, B).array, fraction_matmul(A.array, B.array))


@pytest.mark.parametrize("kernel", [naive_standard, naive_on_array])
def test_accumulation_order_matches_python_loop(kernel, rng):
    # any FMA contraction or reassociation would break bitwise agreement
    for n, p, m in shapes(rng, 15, 1, 20):
        A, B = rand_matrix(rng, n, p), rand_matrix(rng, p, m)
        assert np.array_equal(bits(kernel(A, B).array), bits(py_matmul(A.array, B.array)))


def test_on_array_bitwise_equals_standard(rng):
    for n, p, m in shapes(rng, 30, 1, 40):
        A, B = rand_matrix(rng, n, p, -1e3, 1e3), rand_matrix(rng, p, m)
        assert naive_on_array(A, B).bitwise_equal(naive_standard(A, B))


@pytest.mark.parametrize("kernel", NAIVE[1:], ids=ids[1:])
def test_oracle_agreement(kernel, rng):
    for n, p, m in shapes(rng, 100):
        A, B = rand_matrix(rng, n, p), rand_matrix(rng, p, m)
        dev = norm_inf(Matrix(kernel(A, B).array - naive_standard(A, B).array))
        assert dev <= 2.0 ** -44 * p * norm_inf(A) * norm_inf(B)


def test_unroll_grouping_is_fixed():
    # adding 1 to 2**53 rounds back to 2**53; adding 2 is exact
    big = 2.0 ** 53
    ones = Matrix([[1.0]] * 4)
    A = Matrix([[big, 0.0, 1.0, 1.0]])
    assert naive_standard(A, ones)[0, 0] == big
    assert unroll_two(A, ones)[0, 0] == big + 2       # (big + 0) + (1 + 1)
    assert unroll_four(A, ones)[0, 0] == big          # ((big + 0) + 1) + 1
    A3 = Matrix([[big, 1.0, 0.0, 1.0, 1.0]])
    assert unroll_three(A3, Matrix([[1.0]] * 5))[0, 0] == big  # big, +1, +1 remainder terms one at a time


def test_kahan_absorb_trace():
    acc = KahanAccumulator()
    trace = []
    for x in [1e16, 1.0, -1e16]:
        acc = kahan_absorb(acc, x)
        trace.append((acc.sum, acc.err))
    # IEEE double trace of the four-step update; ties round to even at each step
    assert trace == [(1e16, 0.0), (1e16, 1.0), (0.0, 0.0)]


def test_kahan_absorb_trivial_streams():
    acc = KahanAccumulator()
    for _ in range(5):
        acc = kahan_absorb(acc, 0.0)
    assert (acc.sum, acc.err) == (0.0, 0.0)
    assert kahan_absorb(KahanAccumulator(), 3.25).sum == 3.25


def test_kahan_recovers_lost_bits():
    assert kahan_sum([1e16, 1.0, 1.0, -1e16]) == 2.0
    assert sum([1e16, 1.0, 1.0, -1e16]) == 0.0
    xs = [0.1] * 10
    assert kahan_sum(xs) == math.fsum(xs) == 1.0
    assert sum(xs) != 1.0
    xs = [1.0] + [1e-16] * 10
    assert kahan_sum(xs) == math.fsum(xs) == 1.000000000000001


def test_naive_kahan_matches_scalar_accumulator(rng):
    A, B = rand_matrix(rng, 4, 9, -1e8, 1e8), rand_matrix(rng, 9, 3, -1e8, 1e8)
    C = naive_kahan(A, B)
    for i in range(4):
        for j in range(3):
            terms = [A[i, k] * B[k, j] for k in range(9)]
            assert C[i, j] == kahan_sum(terms)


def test_naive_kahan_cancellation_row():
    A = Matrix([[1e16, 1.0, 1.0, -1e16]])
    B = Matrix([[1.0], [1.0], [1.0], [1.0]])
    assert naive_kahan(A, B)[0, 0] == 2.0
    assert naive_standard(A, B)[0, 0] == 0.0


def test_exact_oracle_is_exact(rng):
    a = rng.uniform(-1e8, 1e8, (4, 7))
    b = rng.uniform(-1e8, 1e8, (7, 3))
    assert np.array_equal(exact_matmul(a, b), fraction_matmul(a, b))


def test_kahan_dominance_statistical(rng):
    wins = 0
    for _ in range(100):
        A = rand_matrix(rng, 32, 32, -1e8, 1e8)
        B = rand_matrix(rng, 32, 32, -1e8, 1e8)
        exact = exact_matmul(A.array, B.array)
        e_kahan = norm_inf(Matrix(naive_kahan(A, B).array - exact))
        e_plain = norm_inf(Matrix(naive_standard(A, B).array - exact))
        wins += e_kahan <= e_plain
        assert e_kahan <= 2 * e_plain
    assert wins >= 90
