"""Membership and generators of the commutative eigenvalue algebra.

A polynomial f (in the spectral variable 't') belongs to the algebra of a
transform exactly when the finite difference f(lambda_{n-k/2}) -
f(lambda_{n-k/2-1}) is divisible by tau_{n-1} in Q[n].  Members are the
eigenvalue profiles that admit a commuting differential operator on the
transformed family.  Each member carries a certificate (g, c): g is the
difference quotient re-expressed spectrally, c the value at the base
point, and the member is recovered from (g, c) by discrete integration.
"""

from dataclasses import dataclass
from fractions import Fraction

from .darboux import DarbouxSpec, epsilon_poly, tau
from .jacobi import eigenvalue, eigenvalue_poly
from .linalg import kernel_basis
from .rationals import as_fraction
from .unipoly import (
    UniPoly,
    discrete_antidifference,
    express_in_quadratic,
    polydivrem,
    substitute_affine,
)

__all__ = [
    "is_member",
    "basis_up_to_degree",
    "echelon_basis",
    "AlgebraElement",
    "element_from_g",
    "certificate_for",
]


def _lambda_shift(spec, shift):
    return eigenvalue_poly(spec.ab, shift)


def _tau_prev(spec):
    return substitute_affine(tau(spec).tau, 1, -1)


def is_member(f, spec):
    """(True, quotient) when the difference of f is divisible by tau_{n-1};
    (False, remainder) otherwise."""
    if f.var != "t":
        raise ValueError("membership is tested on polynomials in 't'")
    kk = Fraction(spec.k, 2)
    diff = f.compose(_lambda_shift(spec, -kk)) - f.compose(_lambda_shift(spec, -kk - 1))
    quo, rem = polydivrem(diff, _tau_prev(spec))
    if rem.is_zero():
        return True, quo
    return False, rem


def basis_up_to_degree(spec, D):
    """Canonical basis of the members of degree <= D.

    The divisibility condition is linear in the coefficients of f; the
    kernel is echelonized with monic leading terms, ascending degree, and
    full reduction against lower-degree members, so the output is unique.
    Constants are always members: the list starts with 1.
    """
    if D < 0:
        raise ValueError("need D >= 0")
    kk = Fraction(spec.k, 2)
    mu1 = _lambda_shift(spec, -kk)
    mu0 = _lambda_shift(spec, -kk - 1)
    tprev = _tau_prev(spec)
    width = tprev.degree  # remainders live below deg tau
    rows_per_i = []
    for i in range(D + 1):
        _, rem = polydivrem(mu1**i - mu0**i, tprev)
        rows_per_i.append([rem.coeff(p) for p in range(width)])
    # constraint matrix: one row per remainder coefficient, one column per t^i
    matrix = [[rows_per_i[i][p] for i in range(D + 1)] for p in range(width)]
    kernel = kernel_basis(matrix)
    return echelon_basis(kernel)


def echelon_basis(vectors):
    """Reduced echelon form pivoting on the highest-degree coefficient."""
    work = [[as_fraction(x) for x in v] for v in vectors]
    basis = []
    for vec in work:
        for b in basis:
            lead = max(i for i, x in enumerate(b) if x != 0)
            if vec[lead]:
                f = vec[lead]
                vec = [x - f * y for x, y in zip(vec, b)]
        if any(vec):
            lead = max(i for i, x in enumerate(vec) if x != 0)
            inv = 1 / vec[lead]
            vec = [x * inv for x in vec]
            for b in basis:
                if b[lead]:
                    f = b[lead]
                    b[:] = [x - f * y for x, y in zip(b, vec)]
            basis.append(list(vec))
    basis.sort(key=lambda b: max(i for i, x in enumerate(b) if x != 0))
    return [UniPoly("t", tuple(b)) for b in basis]


@dataclass(frozen=True)
class AlgebraElement:
    """A member f with its certificate: g the difference-quotient profile,
    c the value of f at the base eigenvalue lambda_{-k/2}."""

    f: UniPoly  # in 't'
    g: UniPoly  # in 't'
    c: Fraction
    spec: DarbouxSpec


def element_from_g(g, c, spec):
    """Member whose finite difference is eps^(k+2)_n g(lambda_{n-(k+1)/2}) tau_{n-1}.

    The discrete integral of that product from 0, plus c, is a polynomial
    in n expressible through lambda_{n-k/2}; failure of that re-expression
    would mean the parity bookkeeping is broken, and raises.
    """
    if g.var != "t":
        raise ValueError("g must be a polynomial in 't'")
    c = as_fraction(c)
    summand = (
        epsilon_poly(spec.k + 2, spec.alpha, spec.beta)
        * g.compose(_lambda_shift(spec, -Fraction(spec.k + 1, 2)))
        * _tau_prev(spec)
    )
    H = discrete_antidifference(summand) + c
    f = express_in_quadratic(H, _lambda_shift(spec, -Fraction(spec.k, 2)), "t")
    return AlgebraElement(f, g, c, spec)


def certificate_for(f, spec):
    """Recover (g, c) from a member by finite differencing; raises on non-members."""
    ok, quo = is_member(f, spec)
    if not ok:
        raise ValueError("not a member: difference is not divisible by tau_{n-1}")
    eps = epsilon_poly(spec.k + 2, spec.alpha, spec.beta)
    if eps.degree > 0:
        quo, rem = polydivrem(quo, eps)
        if not rem.is_zero():
            raise ArithmeticError("difference quotient not divisible by the parity factor")
    g = express_in_quadratic(quo, _lambda_shift(spec, -Fraction(spec.k + 1, 2)), "t")
    c = f(eigenvalue(spec.ab, -Fraction(spec.k, 2)))
    return AlgebraElement(f, g, c, spec)
