"""Dense univariate polynomials over the rationals, with tagged variables.

Three variable tags are used across the package and never mixed silently:
'z' (the continuous variable on [0, 1]), 'n' (the discrete degree index),
and 't' (the spectral variable, i.e. polynomials in the eigenvalue).
Coefficients are stored ascending, with no trailing zeros; the zero
polynomial has an empty coefficient tuple and degree -1.
"""

from dataclasses import dataclass
from fractions import Fraction

from .rationals import as_fraction

__all__ = [
    "UniPoly",
    "polydivrem",
    "substitute_affine",
    "express_in_quadratic",
    "discrete_antidifference",
]

_VARS = ("z", "n", "t")


@dataclass(frozen=True)
class UniPoly:
    var: str
    coeffs: tuple

    def __post_init__(self):
        if self.var not in _VARS:
            raise ValueError(f"unknown variable tag {self.var!r}; expected one of {_VARS}")
        cs = [as_fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, var):
        return cls(var, ())

    @classmethod
    def const(cls, var, c):
        return cls(var, (as_fraction(c),))

    @classmethod
    def variable(cls, var):
        return cls(var, (0, 1))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self):
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        """Leading coefficient (of the zero polynomial: 0)."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            if other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")
            return other
        return UniPoly.const(self.var, other)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.var, tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.var, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = as_fraction(other)
            return UniPoly(self.var, tuple(c * a for a in self.coeffs))
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(self.var, tuple(out))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, m):
        if m < 0:
            raise ValueError("negative power of a polynomial")
        out = UniPoly.const(self.var, 1)
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    # -- evaluation and composition ----------------------------------------

    def __call__(self, x):
        """Evaluate at a rational point (Horner)."""
        x = as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner):
        """self(inner): result lives in inner's variable."""
        acc = UniPoly.zero(inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def derivative(self):
        return UniPoly(self.var, tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*{self.var}")
            else:
                parts.append(f"{c}*{self.var}^{i}")
        return " + ".join(parts)


def polydivrem(f, g):
    """Exact (quotient, remainder) with f = q*g + r, deg r < deg g."""
    if not isinstance(f, UniPoly) or not isinstance(g, UniPoly) or f.var != g.var:
        raise ValueError("polydivrem needs two polynomials in the same variable")
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    q = UniPoly.zero(f.var)
    r = f
    glc = g.lc
    gdeg = g.degree
    while not r.is_zero() and r.degree >= gdeg:
        shift = r.degree - gdeg
        c = r.lc / glc
        mono = UniPoly(f.var, (0,) * shift + (c,))
        q = q + mono
        r = r - mono * g
    return q, r


def substitute_affine(p, u, v):
    """p(u*x + v), expanded exactly. Keeps the variable tag."""
    u, v = as_fraction(u), as_fraction(v)
    inner = UniPoly(p.var, (v, u))
    return p.compose(inner)


def express_in_quadratic(p, quad, out_var="t"):
    """Rewrite p (in x) as a polynomial in a monic quadratic of x.

    Returns r with r(quad(x)) == p(x); raises ValueError when p is not a
    polynomial in quad, which callers treat as a symmetry failure.
    """
    if quad.degree != 2 or quad.lc != 1:
        raise ValueError("expected a monic quadratic")
    out = {}
    rem = p
    while not rem.is_zero():
        d = rem.degree
        if d % 2:
            raise ValueError(f"cannot express degree-{d} tail as a polynomial in a quadratic")
        m = d // 2
        c = rem.lc
        out[m] = c
        rem = rem - c * quad**m
        if not rem.is_zero() and rem.degree >= d:
            raise ValueError("reduction against the quadratic failed to lower the degree")
    size = 1 + max(out) if out else 0
    coeffs = [Fraction(0)] * size
    for m, c in out.items():
        coeffs[m] = c
    result = UniPoly(out_var, tuple(coeffs))
    if result.compose(quad) != p:
        raise ValueError("quadratic re-expression verification failed")
    return result


def _binomial_poly(var, i):
    # C(x+1, i+1) as a polynomial in x
    num = UniPoly.const(var, 1)
    for l in range(i + 1):
        num = num * UniPoly(var, (1 - l, 1))
    denom = 1
    for l in range(2, i + 2):
        denom *= l
    return num * Fraction(1, denom)


def discrete_antidifference(h):
    """H with H(x) - H(x-1) = h(x) identically and H(0) = 0.

    Newton forward differences give h(x) = sum_i d_i * C(x, i); the
    hockey-stick identity then sums each binomial term in closed form.
    """
    if h.is_zero():
        return UniPoly.zero(h.var)
    deg = h.degree
    diffs = [h(i) for i in range(deg + 1)]
    table = [diffs]
    for _ in range(deg):
        prev = table[-1]
        table.append([prev[i + 1] - prev[i] for i in range(len(prev) - 1)])
    out = UniPoly.zero(h.var)
    for i in range(deg + 1):
        d = table[i][0]
        if d == 0:
            continue
        term = _binomial_poly(h.var, i)
        if i == 0:
            term = term - 1
        out = out + d * term
    return out
