"""Discrete integrals and Casorati (discrete Wronskian) determinants.

A "sequence source" is anything indexable by an integer: a callable, a
mapping, or a UniPoly in 'n' (evaluated exactly).  Casorati determinants
follow the convention det(h^(i) at n-j+1), rows i = 1..k, columns j = 1..k,
so the first column sits at index n and later columns step down.
"""

from fractions import Fraction

from .linalg import laplace_det
from .unipoly import UniPoly, substitute_affine

__all__ = ["discrete_integral", "casorati", "wronskian_sum_identity"]


def as_source(src):
    """Normalize a sequence source to a callable int -> value."""
    if isinstance(src, UniPoly):
        if src.var != "n":
            raise ValueError("polynomial sequence sources must be in the variable 'n'")
        return src.__call__
    if callable(src):
        return src
    if hasattr(src, "__getitem__"):
        return src.__getitem__
    raise TypeError(f"not a sequence source: {src!r}")


def discrete_integral(f, m, n):
    """Signed sum of f over (m, n]: sum_{m+1}^{n}, zero at n == m, negated when n < m."""
    f = as_source(f)
    if n == m:
        return Fraction(0)
    if n > m:
        total = Fraction(0)
        for s in range(m + 1, n + 1):
            total = total + f(s)
        return total
    total = Fraction(0)
    for s in range(n + 1, m + 1):
        total = total + f(s)
    return -total


def casorati(sources, n=None):
    """Discrete Wronskian of k sources at n.

    With n given, returns the exact value; with n omitted (all sources
    polynomials in 'n'), returns the determinant as a UniPoly in 'n'.
    """
    k = len(sources)
    if n is None:
        if not all(isinstance(h, UniPoly) for h in sources):
            raise ValueError("symbolic casorati needs all sources to be polynomials in 'n'")
        rows = [
            [substitute_affine(h, 1, 1 - j) for j in range(1, k + 1)]
            for h in sources
        ]
        det = laplace_det(rows)
        return det if isinstance(det, UniPoly) else UniPoly.const("n", det)
    fs = [as_source(h) for h in sources]
    rows = [[f(n - j + 1) for j in range(1, k + 1)] for f in fs]
    return laplace_det(rows)


def wronskian_sum_identity(sources, anchors, n):
    """Check the Casorati/summation compatibility identity at index n.

    sources = [f0, f1, ..., f_{k+1}] (k+2 of them), anchors = k+1 base
    points.  With F_m built from f0-weighted discrete integrals of the
    deleted-column Casoratis, the identity equates Wr(f1..fk, F) at n with
    the integral of f0*Wr(f1..fk) up to n-1 times Wr(f1..f_{k+1}) at n.
    """
    k = len(sources) - 2
    if k < 1 or len(anchors) != k + 1:
        raise ValueError("need k+2 sources and k+1 anchors with k >= 1")
    f0 = as_source(sources[0])
    fs = [as_source(h) for h in sources[1:]]  # f1..f_{k+1}

    cache = {}

    def integrand(j):
        # f0_s * Wr_s of f1..f_{k+1} with f_j deleted (j is 1-based)
        kept = [fs[i] for i in range(k + 1) if i != j - 1]

        def value(s):
            key = (j, s)
            if key not in cache:
                cache[key] = f0(s) * casorati(kept, s)
            return cache[key]

        return value

    def bigF(m):
        total = Fraction(0)
        for j in range(1, k + 2):
            sign = -1 if (k + 1 + j) % 2 else 1
            total += sign * fs[j - 1](m) * discrete_integral(integrand(j), anchors[j - 1], m)
        return total

    lhs_sources = [fs[i] for i in range(k)] + [bigF]
    lhs = casorati(lhs_sources, n)
    scalar = discrete_integral(
        lambda s: f0(s) * casorati(fs[:k], s), anchors[k], n - 1
    )
    rhs = scalar * casorati(fs, n)
    return lhs == rhs
