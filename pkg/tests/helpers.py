from matmul_lab import Matrix


def rand_matrix(rng, n, m, lo=-1.0, hi=1.0):
    return Matrix(rng.uniform(lo, hi, (n, m)))


def int_matrix(rng, n, m, bound=1024):
    return Matrix(rng.integers(-bound, bound + 1, (n, m)).astype(float))


def shapes(rng, count, lo=1, hi=64):
    return [tuple(int(v) for v in rng.integers(lo, hi + 1, 3)) for _ in range(count)]
