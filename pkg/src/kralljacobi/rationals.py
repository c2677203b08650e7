"""Exact rational scalars and their canonical wire format.

Every number in this package is a fractions.Fraction.  Floats are rejected
everywhere: a single rounding step would silently break the zero-tolerance
identity checks the package exists to perform.
"""

import re
from fractions import Fraction

__all__ = ["as_fraction", "rat_str", "parse_rat"]

_RAT_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def as_fraction(x):
    """Coerce int, Fraction, or a 'p/q' string to Fraction. No floats."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rat(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def rat_str(x):
    """Canonical string form: 'p/q' in lowest terms, or 'p' for integers."""
    return str(as_fraction(x))


def parse_rat(s):
    """Parse 'p/q' or 'p' (canonical or not); reject anything else."""
    if not isinstance(s, str) or not _RAT_RE.match(s.strip()):
        raise ValueError(f"not a rational literal: {s!r}")
    return Fraction(s.strip())
