"""Tests for dense univariate polynomials and their discrete calculus."""

import random
from fractions import Fraction

import pytest

from kralljacobi.unipoly import (
    UniPoly,
    discrete_antidifference,
    express_in_quadratic,
    polydivrem,
    substitute_affine,
)

rng = random.Random(20260814)


def rand_poly(var="z", max_deg=6):
    deg = rng.randint(0, max_deg)
    return UniPoly(var, tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(deg + 1)))


def test_trailing_zeros_trimmed():
    p = UniPoly("z", (1, 2, 0, 0))
    assert p.degree == 1
    assert p.coeffs == (Fraction(1), Fraction(2))
    assert UniPoly("z", (0, 0)).is_zero()


def test_basic_accessors():
    p = UniPoly("t", (5, 0, Fraction(1, 3)))
    assert p.degree == 2
    assert p.lc == Fraction(1, 3)
    assert p.coeff(0) == 5
    assert p.coeff(1) == 0
    assert p.coeff(99) == 0


def test_variable_mismatch_raises():
    with pytest.raises(ValueError):
        UniPoly.variable("z") + UniPoly.variable("n")


def test_ring_identities_random():
    for _ in range(40):
        f, g, h = rand_poly(), rand_poly(), rand_poly()
        assert f + g == g + f
        assert (f + g) * h == f * h + g * h
        assert f - f == UniPoly.zero("z")
        x = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        assert (f * g)(x) == f(x) * g(x)
        assert (f + g)(x) == f(x) + g(x)


def test_scalar_arithmetic_coerces():
    f = UniPoly("z", (1, 1))
    assert 2 * f == UniPoly("z", (2, 2))
    assert f + 3 == UniPoly("z", (4, 1))
    assert 3 - f == UniPoly("z", (2, -1))


def test_pow_matches_repeated_product():
    f = UniPoly("z", (1, 2, 1))
    assert f**0 == UniPoly.const("z", 1)
    assert f**3 == f * f * f


def test_derivative_product_rule():
    for _ in range(10):
        f, g = rand_poly(max_deg=4), rand_poly(max_deg=4)
        assert (f * g).derivative() == f.derivative() * g + f * g.derivative()


def test_compose_evaluates_consistently():
    outer = UniPoly("t", (1, -2, 1))
    inner = UniPoly("n", (0, 3, 1))
    both = outer.compose(inner)
    assert both.var == "n"
    for x in range(-3, 4):
        assert both(x) == outer(inner(x))


def test_polydivrem_roundtrip_random():
    for _ in range(40):
        f = rand_poly(max_deg=7)
        g = rand_poly(max_deg=3)
        if g.is_zero():
            continue
        q, r = polydivrem(f, g)
        assert q * g + r == f
        assert r.is_zero() or r.degree < g.degree


def test_polydivrem_rejects_zero_divisor():
    with pytest.raises(ZeroDivisionError):
        polydivrem(UniPoly("z", (1,)), UniPoly.zero("z"))


def test_substitute_affine_is_involutive_for_reflections():
    # x -> -x - (s+1) applied twice is the identity
    for s in (Fraction(0), Fraction(1, 2), Fraction(3)):
        p = rand_poly(var="n", max_deg=5)
        once = substitute_affine(p, -1, -(s + 1))
        assert substitute_affine(once, -1, -(s + 1)) == p


def test_express_in_quadratic_roundtrip():
    quad = UniPoly("n", (Fraction(-3, 4), 2, 1))
    r = UniPoly("t", (1, Fraction(1, 2), -2))
    p = r.compose(quad)
    back = express_in_quadratic(p, quad)
    assert back == r


def test_express_in_quadratic_rejects_odd_part():
    quad = UniPoly("n", (0, 0, 1))
    with pytest.raises(ValueError):
        express_in_quadratic(UniPoly("n", (0, 1)), quad)


def test_discrete_antidifference_telescopes():
    for _ in range(15):
        h = rand_poly(var="n", max_deg=5)
        H = discrete_antidifference(h)
        assert H(0) == 0
        for x in range(-4, 5):
            assert H(x) - H(x - 1) == h(x)
