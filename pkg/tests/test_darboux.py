"""Tests for the transformed families: construction, recurrence, symmetry."""

import random
from fractions import Fraction

import pytest

from kralljacobi.darboux import (
    DarbouxSpec,
    DegeneracyError,
    QFamily,
    fit_recurrence,
    intertwine_check,
    orthogonality_k1,
    psi,
    q_poly,
    q_shifted,
    tau,
)
from kralljacobi.jacobi import JacobiParams, eigenvalue_poly, jacobi_poly
from kralljacobi.unipoly import UniPoly, substitute_affine

rng = random.Random(5)

SPEC1 = DarbouxSpec(1, Fraction(0), 1, (Fraction(1),))
SPEC2 = DarbouxSpec(2, Fraction(1, 2), 2, (Fraction(1), Fraction(1)))


def test_spec_validation():
    with pytest.raises(ValueError):
        DarbouxSpec(1, Fraction(0), 2, (Fraction(1), Fraction(1)))  # k > alpha
    with pytest.raises(ValueError):
        DarbouxSpec(2, Fraction(0), 2, (Fraction(1),))  # wrong a length


def test_psi_solves_the_ladder_equations():
    """(L - 1) psi^0 = 0 and (L - 1) psi^j = psi^(j-1), the defining property.

    L acts on sequences through the recurrence coefficients; this is the
    oracle that pins the seed sequences independently of their closed form.
    """
    for spec in (SPEC1, SPEC2, DarbouxSpec(3, Fraction(1, 3), 3, (Fraction(1), Fraction(2), Fraction(1, 2)))):
        prm = JacobiParams(spec.alpha, spec.beta)
        seqs = [psi(j, spec) for j in range(spec.k)]
        from kralljacobi.jacobi import recurrence_coeffs

        for j, seq in enumerate(seqs):
            want = seqs[j - 1] if j else UniPoly.zero("n")
            for n in range(1, 9):
                A, B, C = recurrence_coeffs(n, prm)
                image = A * seq(n + 1) + B * seq(n) + C * seq(n - 1) - seq(n)
                assert image == want(n)


def test_first_transformed_polynomials():
    # frozen for the worked one-step family beta=0, a0=1
    fam = QFamily(SPEC1)
    assert fam.q(0) == UniPoly("z", (-1,))
    assert fam.q(1) == UniPoly("z", (9, -12))
    assert fam.shifted(0, 1) == UniPoly("z", (Fraction(-5, 4),))


def test_degrees_and_leading_coefficients():
    for spec in (SPEC1, SPEC2):
        td = tau(spec)
        prm = JacobiParams(spec.alpha, spec.beta)
        for n in range(10):
            q = q_poly(n, spec)
            assert q.degree == n
            lead = (-1) ** spec.k * td.tau(n - 1) * jacobi_poly(n, prm).coeff(n)
            assert q.coeff(n) == lead


def test_qfamily_memoizes_and_matches_direct_construction():
    fam = QFamily(SPEC2)
    assert fam.q(5) is fam.q(5)
    assert fam.q(4) == q_poly(4, SPEC2)
    assert fam.shifted(3, 2) == q_shifted(3, 2, SPEC2)
    assert fam.shifted(3, 0) == fam.q(3)


def test_three_term_recurrence():
    z = UniPoly.variable("z")
    for spec in (SPEC1, SPEC2):
        fam = QFamily(spec)
        rec = fit_recurrence(spec, 10)
        assert rec.c[0] == 0
        for n in range(11):
            rhs = rec.a[n] * fam.q(n + 1) + rec.b[n] * fam.q(n)
            if n:
                rhs = rhs + rec.c[n] * fam.q(n - 1)
            assert z * fam.q(n) == rhs


def test_recurrence_matrix_truncation():
    rec = fit_recurrence(SPEC1, 5)
    M = rec.matrix(5)
    assert M[2][3] == rec.a[2] and M[2][2] == rec.b[2] and M[2][1] == rec.c[2]


def test_tau_involution_symmetry():
    for k in (1, 2, 3, 4):
        beta = Fraction(rng.randint(0, 3), rng.randint(1, 3))
        a = tuple(Fraction(rng.randint(1, 6), rng.randint(1, 4)) for _ in range(k))
        spec = DarbouxSpec(k, beta, k, a)
        td = tau(spec)
        s = spec.ab - k + 1
        sign = -1 if (k * (k - 1) // 2) % 2 else 1
        assert substitute_affine(td.tau, -1, -(s + 1)) == sign * td.tau
        lam = eigenvalue_poly(spec.ab, -Fraction(k - 1, 2))
        assert td.eps * td.tau_bar.compose(lam) == td.tau


def test_degenerate_point_detected_with_index():
    degenerate = DarbouxSpec(2, Fraction(0), 2, (Fraction(1), Fraction(1)))
    with pytest.raises(DegeneracyError) as err:
        q_poly(0, degenerate)
    assert "-1" in str(err.value)
    # the degeneracy is isolated: the next polynomial still exists
    assert q_poly(1, degenerate).degree == 1


def test_shift_zero_is_plain_family():
    for spec in (SPEC1, SPEC2):
        for n in range(7):
            assert q_shifted(n, 0, spec) == q_poly(n, spec)


def test_shifted_family_factors_through_parameter_shift():
    """The weighted family at shift s is a rescaled one-step family with
    shifted weight parameter and modified a0."""
    for beta, a0 in ((Fraction(0), Fraction(1)), (Fraction(1, 2), Fraction(1, 3))):
        spec = DarbouxSpec(1, beta, 1, (a0,))
        for s in range(1, 5):
            a0s = (4 * a0 + 4 * a0 * beta + 2 * beta * s + s * s) / (4 * (1 + beta + s))
            factor = Fraction(1 + beta + s) / (1 + beta)
            other = DarbouxSpec(1, beta + s, 1, (a0s,))
            for n in range(6):
                assert q_shifted(n, s, spec) == factor * q_poly(n, other)


def test_intertwining_truncated():
    assert intertwine_check(SPEC1, 10)
    assert intertwine_check(SPEC2, 10)


def test_orthogonality_point_mass_vanishes_off_diagonal():
    for n in range(6):
        for m in range(n):
            assert orthogonality_k1(SPEC1, m, n) == 0
        assert orthogonality_k1(SPEC1, n, n) != 0


def test_orthogonality_shifted():
    spec = DarbouxSpec(1, Fraction(1, 2), 1, (Fraction(1, 3),))
    for s in range(1, 4):
        for n in range(5):
            for m in range(n):
                assert orthogonality_k1(spec, m, n, s) == 0


def test_orthogonality_requires_one_step():
    with pytest.raises(ValueError):
        orthogonality_k1(SPEC2, 0, 1)
