"""Tests for the ball/sphere lift: harmonics, moments, eigen structure."""

from fractions import Fraction
from math import comb

import pytest

from kralljacobi.darboux import DarbouxSpec
from kralljacobi.jacobi import eigenvalue
from kralljacobi.mpoly import MPoly
from kralljacobi.multivariate import (
    apply_geometric,
    ball_integral,
    harmonic_basis,
    inner_product_kd,
    q_multivariate,
    realize_pde,
    sigma_dim,
    sphere_integral,
)
from kralljacobi.ncalg import NCOp, fit_operator, realize
from kralljacobi.darboux import QFamily
from kralljacobi.unipoly import UniPoly


def test_mpoly_basics():
    x = MPoly.variable(2, 0)
    y = MPoly.variable(2, 1)
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert p.total_degree() == 2
    assert p.coeff((2, 0)) == 1
    assert p.partial(0) == 2 * x
    r2 = MPoly.norm_sq(3)
    assert r2.dim == 3
    assert r2.coeff((0, 2, 0)) == 1


def test_from_radial_substitutes_norm_square():
    p = UniPoly("z", (9, -12))
    assert MPoly.from_radial(p, 2) == MPoly.const(2, Fraction(9)) - 12 * MPoly.norm_sq(2)


def test_sigma_dim_formula():
    assert sigma_dim(2, 0) == 1
    assert sigma_dim(2, 3) == 2
    assert sigma_dim(3, 2) == 5
    assert sigma_dim(4, 2) == 9


def test_harmonic_basis_properties():
    for d in (2, 3):
        for l in range(5):
            basis = harmonic_basis(d, l)
            assert len(basis) == sigma_dim(d, l)
            for y in basis:
                assert apply_geometric("laplacian", y).is_zero()
                assert apply_geometric("euler", y) == Fraction(l) * y
            for i in range(len(basis)):
                for j in range(i):
                    assert sphere_integral(basis[i] * basis[j], d) == 0


def test_sphere_integral_oracles():
    assert sphere_integral(MPoly.const(3, Fraction(1)), 3) == 1
    assert sphere_integral(MPoly.variable(2, 0) ** 2, 2) == Fraction(1, 2)
    assert sphere_integral(MPoly.variable(3, 0) ** 2, 3) == Fraction(1, 3)
    assert sphere_integral(MPoly.variable(3, 0) ** 4, 3) == Fraction(1, 5)
    # odd powers vanish
    assert sphere_integral(MPoly.variable(3, 0) ** 3, 3) == 0


def test_ball_integral_oracles():
    assert ball_integral(MPoly.const(2, Fraction(1)), 2) == Fraction(1, 2)
    assert ball_integral(MPoly.norm_sq(2), 2) == Fraction(1, 4)
    assert ball_integral(MPoly.const(2, Fraction(9)) - 12 * MPoly.norm_sq(2), 2) == Fraction(3, 2)
    assert ball_integral(MPoly.const(3, Fraction(1)), 3) == Fraction(1, 3)


def test_sphere_laplacian_eigenvalue_untouched_by_radial_factors():
    for d in (2, 3):
        for l in range(4):
            for y in harmonic_basis(d, l):
                for m in range(3):
                    p = y * (MPoly.norm_sq(d) ** m)
                    assert apply_geometric("sphere_laplacian", p) == Fraction(-l * (l + d - 2)) * p


def test_realized_commutator_is_quarter_laplacian():
    # [Lap/4, E/2] p = (Lap/4) p for every polynomial p
    for d in (2, 3):
        p = (MPoly.variable(d, 0) + MPoly.const(d, Fraction(1))) ** 3
        euler = apply_geometric("euler", p)
        lap = apply_geometric("laplacian", p)
        left = apply_geometric("laplacian", euler) * Fraction(1, 8)
        right = apply_geometric("euler", lap) * Fraction(1, 8)
        assert left - right == lap * Fraction(1, 4)


def test_q_multivariate_frozen_values():
    spec = DarbouxSpec(1, Fraction(0), 1, (Fraction(1),))
    assert q_multivariate(0, 0, 1, spec, 2) == MPoly.const(2, Fraction(-1))
    assert q_multivariate(2, 1, 1, spec, 2) == MPoly.const(2, Fraction(9)) - 12 * MPoly.norm_sq(2)
    assert q_multivariate(1, 0, 1, spec, 2) == Fraction(-5, 4) * MPoly.variable(2, 0)


def test_q_multivariate_guards():
    spec = DarbouxSpec(1, Fraction(0), 1, (Fraction(1),))
    with pytest.raises(ValueError):
        q_multivariate(1, 0, 1, spec, 3)  # beta mismatch with d
    with pytest.raises(ValueError):
        q_multivariate(2, 0, 99, spec, 2)  # harmonic index out of range


def test_basis_counts_fill_polynomial_space():
    for d in (2, 3, 4):
        for n in range(8):
            total = sum(sigma_dim(d, n - 2 * i) for i in range(n // 2 + 1))
            assert total == comb(n + d - 1, d - 1)


def test_eigen_equation_small():
    d = 2
    spec = DarbouxSpec(1, Fraction(0), 1, (Fraction(1),))
    qfam = QFamily(spec)
    f = UniPoly("t", (0, Fraction(7, 2), 1))
    op = fit_operator(f, spec, qfam)
    for n in range(5):
        for i in range(n // 2 + 1):
            for j in range(1, sigma_dim(d, n - 2 * i) + 1):
                Q = q_multivariate(n, i, j, spec, d)
                ev = f(eigenvalue(1, Fraction(n - 1, 2)))
                assert realize_pde(op, Q, d) == Q * ev


def test_realize_pde_radial_consistency():
    op = NCOp(Fraction(0), {(2, 0): 1, (0, 1): Fraction(1, 3), (1, 1): -2})
    p = UniPoly("z", (1, -2, Fraction(1, 5)))
    assert realize_pde(op, MPoly.from_radial(p, 2), 2) == MPoly.from_radial(realize(op, p), 2)


def test_realize_pde_dimension_guard():
    with pytest.raises(ValueError):
        realize_pde(NCOp(Fraction(0), {(1, 0): 1}), MPoly.const(3, Fraction(1)), 3)


def test_inner_product_orthogonality_and_norms():
    d = 2
    a0 = Fraction(1)
    spec = DarbouxSpec(1, Fraction(0), 1, (a0,))
    fam = []
    for n in range(4):
        for i in range(n // 2 + 1):
            for j in range(1, sigma_dim(d, n - 2 * i) + 1):
                fam.append(q_multivariate(n, i, j, spec, d))
    for x in range(len(fam)):
        assert inner_product_kd(fam[x], fam[x], d, a0) > 0
        for y in range(x):
            assert inner_product_kd(fam[x], fam[y], d, a0) == 0


def test_inner_product_includes_point_mass():
    # dropping the sphere term breaks orthogonality of the radial pair
    lo = MPoly.const(2, Fraction(-1))
    hi = MPoly.const(2, Fraction(9)) - 12 * MPoly.norm_sq(2)
    assert inner_product_kd(lo, hi, 2, Fraction(1)) == 0
    assert ball_integral(lo * hi, 2) != 0
