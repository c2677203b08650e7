"""Tests for exact rational linear algebra."""

import random
from fractions import Fraction

from kralljacobi.linalg import LinearProblem, kernel_basis, laplace_det, solve_exact
from kralljacobi.unipoly import UniPoly

rng = random.Random(11)


def rand_matrix(rows, cols, lo=-5, hi=5):
    return [[Fraction(rng.randint(lo, hi)) for _ in range(cols)] for _ in range(rows)]


def test_unique_solution():
    res = solve_exact(LinearProblem([[2, 1], [1, -1]], [5, 1]))
    assert res.status == "unique"
    assert res.solution == [Fraction(2), Fraction(1)]
    assert res.kernel == []


def test_inconsistent_certificate():
    res = solve_exact(LinearProblem([[1, 1], [2, 2]], [1, 3]))
    assert res.status == "inconsistent"
    assert res.solution is None
    zero_row, nonzero_rhs = res.certificate
    assert all(x == 0 for x in zero_row)
    assert nonzero_rhs != 0


def test_underdetermined_reports_kernel():
    res = solve_exact(LinearProblem([[1, 1, 0]], [2]))
    assert res.status == "affine"
    assert len(res.kernel) == 2
    # particular solution still solves the system
    assert sum(c * x for c, x in zip([1, 1, 0], res.solution)) == 2


def test_random_consistent_systems():
    for _ in range(25):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        A = rand_matrix(rows, cols)
        x = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(cols)]
        b = [sum(A[i][j] * x[j] for j in range(cols)) for i in range(rows)]
        res = solve_exact(LinearProblem(A, b))
        assert res.status in ("unique", "affine")
        sol = res.solution
        assert all(sum(A[i][j] * sol[j] for j in range(cols)) == b[i] for i in range(rows))


def test_kernel_vectors_annihilated():
    for _ in range(25):
        A = rand_matrix(rng.randint(1, 4), rng.randint(1, 5))
        for v in kernel_basis(A):
            assert all(sum(row[j] * v[j] for j in range(len(v))) == 0 for row in A)


def test_kernel_dimension_rank_nullity():
    A = [[1, 2, 3], [2, 4, 6], [0, 0, 1]]  # rank 2
    assert len(kernel_basis(A)) == 1


def test_laplace_det_scalar():
    assert laplace_det([[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]) == -2
    assert laplace_det([[Fraction(7)]]) == 7


def test_laplace_det_polynomial_entries():
    n = UniPoly.variable("n")
    one = UniPoly.const("n", 1)
    # det [[n, 1], [1, n]] = n^2 - 1
    det = laplace_det([[n, one], [one, n]])
    assert det == n * n - 1


def test_laplace_det_alternating_rows():
    rows = [[Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
    swapped = [rows[1], rows[0], rows[2]]
    assert laplace_det(swapped) == -laplace_det(rows)
