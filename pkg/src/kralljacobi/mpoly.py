"""Sparse exact polynomials in d variables (exponent-vector keyed)."""

from fractions import Fraction

from .rationals import as_fraction

__all__ = ["MPoly"]


class MPoly:
    """Polynomial in x_1..x_d with rational coefficients.

    terms maps exponent tuples to nonzero Fractions.  Instances are
    treated as immutable; all arithmetic returns fresh objects.
    """

    __slots__ = ("dim", "terms")

    def __init__(self, dim, terms):
        object.__setattr__(self, "dim", int(dim))
        clean = {}
        for exps, c in dict(terms).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.dim or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for dimension {self.dim}")
            c = as_fraction(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
        clean = {e: c for e, c in clean.items() if c}
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    @classmethod
    def const(cls, dim, c):
        return cls(dim, {(0,) * dim: c})

    @classmethod
    def variable(cls, dim, i):
        exps = [0] * dim
        exps[i] = 1
        return cls(dim, {tuple(exps): 1})

    @classmethod
    def norm_sq(cls, dim):
        return cls(dim, {tuple(2 if j == i else 0 for j in range(dim)): 1 for i in range(dim)})

    @classmethod
    def from_radial(cls, p, dim):
        """p(|x|^2) for a univariate p: substitute the squared norm."""
        out = cls.const(dim, 0)
        r2 = cls.norm_sq(dim)
        for c in reversed(p.coeffs):
            out = out * r2 + c
        return out

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_components(self):
        """dict: degree -> homogeneous part."""
        parts = {}
        for e, c in self.terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: MPoly(self.dim, t) for d, t in sorted(parts.items())}

    def coeff(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def partial(self, i):
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c * e[i]
        return MPoly(self.dim, out)

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.dim != self.dim:
                raise ValueError("dimension mismatch")
            return other
        return MPoly.const(self.dim, other)

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MPoly(self.dim, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.dim, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            c = as_fraction(other)
            return MPoly(self.dim, {e: c * v for e, v in self.terms.items()})
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return MPoly(self.dim, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, m):
        if m < 0:
            raise ValueError("negative power")
        out = MPoly.const(self.dim, 1)
        for _ in range(m):
            out = out * self
        return out

    def __call__(self, point):
        point = [as_fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, p in zip(point, e):
                v *= x**p
            total += v
        return total

    def sorted_terms(self):
        """Terms in ascending lexicographic exponent order (wire order)."""
        return [(e, self.terms[e]) for e in sorted(self.terms)]

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"x{i + 1}^{p}" for i, p in enumerate(e) if p)
            bits.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(bits)
