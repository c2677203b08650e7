"""Rotation-invariant realization on the unit ball in R^d.

The univariate picture at beta = d/2 - 1 lifts through z = |x|^2: the
operator generators become (1/2) x.grad and (1/4) Laplacian, radial
transforms of the shifted families multiply spherical harmonics, and the
eigenvalue profiles act as honest partial differential operators.  All
sphere/ball integrals of polynomials are rational once normalized by the
surface measure of the sphere, so every identity stays exact.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb

from .darboux import q_shifted
from .linalg import kernel_basis
from .mpoly import MPoly
from .rationals import as_fraction
from .unipoly import UniPoly

__all__ = [
    "sigma_dim",
    "harmonic_basis",
    "sphere_integral",
    "ball_integral",
    "apply_geometric",
    "q_multivariate",
    "realize_pde",
    "inner_product_kd",
]


def sigma_dim(d, l):
    """Dimension of the degree-l harmonic space in d variables."""
    if d < 2 or l < 0:
        raise ValueError("need d >= 2 and l >= 0")
    first = comb(l + d - 1, d - 1)
    second = comb(l + d - 3, d - 1) if l + d - 3 >= 0 else 0
    return first - second


def _monomials(d, l):
    """Exponent vectors of total degree l, descending lexicographic."""
    if d == 1:
        return [(l,)]
    out = []
    for first in range(l, -1, -1):
        out.extend((first,) + rest for rest in _monomials(d - 1, l - first))
    return out


def laplacian(p):
    out = MPoly.const(p.dim, 0)
    for i in range(p.dim):
        out = out + p.partial(i).partial(i)
    return out


def euler_op(p):
    out = MPoly.const(p.dim, 0)
    for i in range(p.dim):
        out = out + MPoly.variable(p.dim, i) * p.partial(i)
    return out


def sphere_laplacian(p):
    """Laplace-Beltrami extension: |x|^2 Lap - E^2 - (d-2) E with E = x.grad."""
    e1 = euler_op(p)
    return MPoly.norm_sq(p.dim) * laplacian(p) - euler_op(e1) - (p.dim - 2) * e1


_GEOMETRIC = {
    "laplacian": laplacian,
    "euler": euler_op,
    "sphere_laplacian": sphere_laplacian,
}


def apply_geometric(kind, p):
    """Apply a named geometric operator: 'laplacian', 'euler', 'sphere_laplacian'."""
    try:
        return _GEOMETRIC[kind](p)
    except KeyError:
        raise ValueError(f"unknown geometric operator {kind!r}") from None


@lru_cache(maxsize=None)
def harmonic_basis(d, l):
    """Sphere-orthogonal basis of harmonic polynomials of degree l in d variables.

    Deterministic: the Laplacian kernel is echelonized against the
    descending-lex monomial order, then Gram-Schmidt is run in that order
    without normalization (keeping rational coefficients).
    """
    monos = _monomials(d, l)
    if l < 2:
        vectors = [[Fraction(i == j) for j in range(len(monos))] for i in range(len(monos))]
    else:
        lower = _monomials(d, l - 2)
        index = {e: r for r, e in enumerate(lower)}
        # rows: coefficient of each degree-(l-2) monomial in Lap(x^e)
        matrix = [[Fraction(0)] * len(monos) for _ in lower]
        for col, e in enumerate(monos):
            basis_term = MPoly(d, {e: 1})
            for e2, c in laplacian(basis_term).terms.items():
                matrix[index[e2]][col] += c
        vectors = kernel_basis(matrix)
    polys = [MPoly(d, {monos[i]: c for i, c in enumerate(v) if c}) for v in vectors]
    ortho = []
    for p in polys:
        for u in ortho:
            num = sphere_integral(p * u, d)
            if num:
                p = p - (num / sphere_integral(u * u, d)) * u
        ortho.append(p)
    if len(ortho) != sigma_dim(d, l):
        raise ArithmeticError(f"harmonic dimension mismatch at d={d}, l={l}")
    return tuple(ortho)


def sphere_integral(p, d=None):
    """Mean of p over the unit sphere (normalized by the sphere's measure)."""
    if d is None:
        d = p.dim
    if p.dim != d:
        raise ValueError("dimension mismatch")
    total = Fraction(0)
    for e, c in p.terms.items():
        if any(x % 2 for x in e):
            continue
        b = [x // 2 for x in e]
        num = Fraction(1)
        for bi in b:
            num *= Fraction(_factorial(2 * bi), 4**bi * _factorial(bi))
        den = Fraction(1)
        half = Fraction(d, 2)
        for i in range(sum(b)):
            den *= half + i
        total += c * num / den
    return total


def _factorial(m):
    out = 1
    for i in range(2, m + 1):
        out *= i
    return out


def ball_integral(p, d=None):
    """Mean of p over the unit ball, normalized by the sphere's measure.

    Integrating each homogeneous degree-t piece radially contributes
    1/(t+d) times its sphere mean.
    """
    if d is None:
        d = p.dim
    if p.dim != d:
        raise ValueError("dimension mismatch")
    total = Fraction(0)
    for t, part in p.homogeneous_components().items():
        total += sphere_integral(part, d) / (t + d)
    return total


def q_multivariate(n, i, j, spec, d):
    """Eigenbasis member Q_{n,i,j}: radial q_shifted(i, n-2i) times the j-th harmonic.

    j is 1-based, following the harmonic_basis order.  Requires the spec
    to sit at the geometric parameter beta = d/2 - 1.
    """
    if spec.beta != Fraction(d, 2) - 1:
        raise ValueError(f"spec.beta must be d/2 - 1 = {Fraction(d, 2) - 1}, got {spec.beta}")
    if n < 0 or i < 0 or 2 * i > n:
        raise ValueError("need n >= 0 and 0 <= 2i <= n")
    harmonics = harmonic_basis(d, n - 2 * i)
    if not 1 <= j <= len(harmonics):
        raise ValueError(f"harmonic index {j} outside 1..{len(harmonics)}")
    radial = MPoly.from_radial(q_shifted(i, n - 2 * i, spec), d)
    return radial * harmonics[j - 1]


def realize_pde(op, p, d):
    """Apply a normal-form operator as a PDE: D1 -> (1/2) x.grad, D2 -> (1/4) Lap."""
    if op.beta != Fraction(d, 2) - 1:
        raise ValueError(f"operator beta {op.beta} is not d/2 - 1 = {Fraction(d, 2) - 1}")
    if p.dim != d:
        raise ValueError("dimension mismatch")
    by_j = {}
    for (i, j), c in op.terms.items():
        by_j.setdefault(j, []).append((i, c))
    out = MPoly.const(d, 0)
    w = p
    for j in range(max(by_j, default=0) + 1):
        if j > 0:
            w = laplacian(w) * Fraction(1, 4)
        for i, c in by_j.get(j, ()):
            v = w
            for _ in range(i):
                v = euler_op(v) * Fraction(1, 2)
            out = out + c * v
    return out


def inner_product_kd(f, g, d, a0, alpha=1):
    """Sobolev-type pairing on the ball for the alpha = k = 1 family.

    ball mean of f g, plus (u0/2) sphere mean of f g, minus (u0/4) ball
    mean of (sphere_laplacian f) g, with u0 = 2/(a0 d); all normalized by
    the sphere's measure.
    """
    if alpha != 1:
        raise ValueError("closed-form pairing known only for alpha = k = 1")
    a0 = as_fraction(a0)
    u0 = Fraction(2) / (a0 * d)
    prod = f * g
    return (
        ball_integral(prod, d)
        + u0 / 2 * sphere_integral(prod, d)
        - u0 / 4 * ball_integral(sphere_laplacian(f) * g, d)
    )
