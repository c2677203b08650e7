"""Tests for the exact rational scalar layer."""

from fractions import Fraction

import pytest

from kralljacobi.rationals import as_fraction, parse_rat, rat_str


def test_as_fraction_accepts_int_fraction_string():
    assert as_fraction(3) == Fraction(3)
    assert as_fraction(Fraction(2, 4)) == Fraction(1, 2)
    assert as_fraction("-7/3") == Fraction(-7, 3)
    assert as_fraction("+4") == Fraction(4)


def test_as_fraction_rejects_floats():
    # one rounding step would break every zero-tolerance check downstream
    with pytest.raises(TypeError):
        as_fraction(0.5)
    with pytest.raises(TypeError):
        as_fraction(1.0)


def test_parse_rat_rejects_garbage():
    for bad in ("", "a", "1/0", "1/-2", "3.5", "1e3", "1 / 2", None, 7):
        with pytest.raises(ValueError):
            parse_rat(bad)


def test_rat_str_is_canonical():
    assert rat_str(Fraction(4, 8)) == "1/2"
    assert rat_str(-2) == "-2"
    assert rat_str(Fraction(0)) == "0"
    assert rat_str("6/4") == "3/2"


def test_string_roundtrip():
    for x in (Fraction(0), Fraction(5), Fraction(-17, 6), Fraction(22, 7)):
        assert parse_rat(rat_str(x)) == x
