"""Classical Jacobi polynomials on [0, 1], exact in the rationals.

The family p_n for weight (1-z)^alpha * z^beta is normalized through the
terminating hypergeometric sum

    p_n(z) = (-1)^n ((alpha+beta+1)_n / n!)
             * sum_m ((-n)_m (n+alpha+beta+1)_m / ((beta+1)_m m!)) z^m,

which fixes signs and scales for every identity in the package; do not
swap in another normalization.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rationals import as_fraction
from .unipoly import UniPoly

__all__ = [
    "JacobiParams",
    "jacobi_poly",
    "recurrence_coeffs",
    "beta_moment",
    "eigenvalue",
    "eigenvalue_poly",
    "poch",
    "poch_poly",
]


@dataclass(frozen=True)
class JacobiParams:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_fraction(self.alpha))
        object.__setattr__(self, "beta", as_fraction(self.beta))
        if self.alpha <= -1 or self.beta <= -1:
            raise ValueError(f"need alpha, beta > -1; got ({self.alpha}, {self.beta})")


def poch(x, m):
    """Rising factorial (x)_m for rational x, integer m >= 0."""
    x = as_fraction(x)
    out = Fraction(1)
    for i in range(m):
        out *= x + i
    return out


def poch_poly(p, m):
    """Rising factorial of a polynomial argument: p (p+1) ... (p+m-1)."""
    out = UniPoly.const(p.var, 1)
    for i in range(m):
        out = out * (p + i)
    return out


@lru_cache(maxsize=None)
def _jacobi_cached(n, alpha, beta):
    s = alpha + beta
    pref = Fraction(-1) ** n * poch(s + 1, n) / poch(1, n)
    coeffs = []
    term = Fraction(1)  # ratio chain of (-n)_m (n+s+1)_m / ((beta+1)_m m!)
    for m in range(n + 1):
        coeffs.append(pref * term)
        term *= Fraction(m - n) * (n + s + 1 + m) / ((beta + 1 + m) * (m + 1))
    return UniPoly("z", tuple(coeffs))


def jacobi_poly(n, prm):
    """Degree-n Jacobi polynomial for the weight (1-z)^alpha z^beta on [0,1]."""
    if n < 0:
        raise ValueError("jacobi_poly needs n >= 0; callers treat n < 0 as zero")
    p = _jacobi_cached(n, prm.alpha, prm.beta)
    if p.degree != n:
        raise ArithmeticError(f"degenerate normalization at n={n}, {prm}")
    return p


def recurrence_coeffs(n, prm):
    """(A_n, B_n, C_n) with z p_n = A_n p_{n+1} + B_n p_n + C_n p_{n-1}.

    B_n = 1 - A_n - C_n.  At n = 0 the factor (2n+alpha+beta) cancels out
    of C_0 before anything divides by it, leaving alpha/(alpha+beta+1);
    p_{-1} = 0 makes the recurrence insensitive to C_0 anyway, but B_0
    needs the cancelled value.
    """
    if n < 0:
        raise ValueError("recurrence_coeffs needs n >= 0")
    s = prm.alpha + prm.beta
    dens = [2 * n + s + 1, 2 * n + s + 2] + ([2 * n + s] if n > 0 else [s + 1])
    for d in dens:
        if d == 0:
            raise ZeroDivisionError(f"recurrence denominator vanishes at n={n}, {prm}")
    A = Fraction(n + 1) * (n + prm.beta + 1) / ((2 * n + s + 1) * (2 * n + s + 2))
    if n > 0:
        C = (n + prm.alpha) * (n + s) / ((2 * n + s) * (2 * n + s + 1))
    else:
        C = prm.alpha / (s + 1)
    B = 1 - A - C
    return A, B, C


def beta_moment(c, e):
    """Integral of z^c (1-z)^e over [0,1]: e! / ((c+1)(c+2)...(c+e+1))."""
    c = as_fraction(c)
    if c <= -1:
        raise ValueError(f"need exponent c > -1; got {c}")
    e = as_fraction(e)
    if e < 0 or e.denominator != 1:
        raise ValueError(f"need integer e >= 0; got {e}")
    e = int(e)
    num = poch(1, e)  # e!
    den = Fraction(1)
    for i in range(1, e + 2):
        den *= c + i
    return num / den


def eigenvalue(s, x):
    """lambda^s_x = x (x + s + 1)."""
    s, x = as_fraction(s), as_fraction(x)
    return x * (x + s + 1)


def eigenvalue_poly(s, shift):
    """lambda^s_{n+shift} as a UniPoly in 'n'."""
    s, shift = as_fraction(s), as_fraction(shift)
    m = UniPoly("n", (shift, 1))
    return m * (m + s + 1)
