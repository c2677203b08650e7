"""Operator algebra generated by D1 = z d/dz and D2 = z d^2/dz^2 + (beta+1) d/dz.

The commutation rule [D2, D1] = D2 closes the algebra; every element is
kept in the normal form sum c_{ij} D1^i D2^j (all D1 powers on the left).
Products reduce through D2^j D1^i = (D1 + j)^i D2^j.  The order of a
monomial is i + 2j, matching the differential order of its realization.

Terms are exact rationals; beta rides along so realization on concrete
polynomials needs no extra context.  The optional weight shift s realizes
D1 as D1 + s/2 and D2 as z d^2/dz^2 + (beta+s+1) d/dz, which is the
conjugation of the singular weighted pair by z^{s/2}.
"""

from fractions import Fraction
from math import comb

from .jacobi import eigenvalue
from .linalg import LinearProblem, solve_exact
from .rationals import as_fraction, rat_str
from .unipoly import UniPoly, substitute_affine

__all__ = [
    "NCOp",
    "nc_mul",
    "commutator",
    "realize",
    "jacobi_operator",
    "jacobi_sum_operator",
    "fit_operator",
    "FitError",
]


class FitError(ValueError):
    """Eigen-operator fitting failed (inconsistent or underdetermined)."""


class NCOp:
    """Normal-form element sum c_{ij} D1^i D2^j with rational coefficients."""

    __slots__ = ("beta", "terms")

    def __init__(self, beta, terms):
        object.__setattr__(self, "beta", as_fraction(beta))
        clean = {}
        for (i, j), c in dict(terms).items():
            c = as_fraction(c)
            if c:
                clean[(int(i), int(j))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("NCOp is immutable")

    @classmethod
    def zero(cls, beta):
        return cls(beta, {})

    @classmethod
    def identity(cls, beta):
        return cls(beta, {(0, 0): 1})

    @classmethod
    def d1(cls, beta):
        return cls(beta, {(1, 0): 1})

    @classmethod
    def d2(cls, beta):
        return cls(beta, {(0, 1): 1})

    @property
    def order(self):
        return max((i + 2 * j for i, j in self.terms), default=0)

    def _check(self, other):
        if self.beta != other.beta:
            raise ValueError(f"beta mismatch: {self.beta} vs {other.beta}")

    def __eq__(self, other):
        if not isinstance(other, NCOp):
            return NotImplemented
        return self.beta == other.beta and self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, NCOp):
            other = NCOp(self.beta, {(0, 0): other})
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return NCOp(self.beta, out)

    __radd__ = __add__

    def __neg__(self):
        return NCOp(self.beta, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, NCOp):
            other = NCOp(self.beta, {(0, 0): other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, NCOp):
            return nc_mul(self, other)
        c = as_fraction(other)
        return NCOp(self.beta, {k: c * v for k, v in self.terms.items()})

    def __rmul__(self, other):
        # scalars commute with everything, so right-scaling is left-scaling
        return self.__mul__(other)

    def __pow__(self, m):
        if m < 0:
            raise ValueError("negative operator power")
        out = NCOp.identity(self.beta)
        for _ in range(m):
            out = nc_mul(out, self)
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for (i, j) in sorted(self.terms):
            c = self.terms[(i, j)]
            name = "".join(filter(None, [f"D1^{i}" if i else "", f"D2^{j}" if j else ""]))
            bits.append(f"{rat_str(c)}*{name}" if name else rat_str(c))
        return " + ".join(bits)


def nc_mul(a, b):
    """Exact product in normal form via D2^j D1^i = (D1 + j)^i D2^j."""
    a._check(b)
    out = {}
    for (i1, j1), c1 in a.terms.items():
        for (i2, j2), c2 in b.terms.items():
            c = c1 * c2
            # (D1 + j1)^{i2} expands binomially; all terms share D2^{j1+j2}
            for m in range(i2 + 1):
                key = (i1 + m, j1 + j2)
                coef = c * comb(i2, m) * Fraction(j1) ** (i2 - m)
                out[key] = out.get(key, Fraction(0)) + coef
    return NCOp(a.beta, out)


def commutator(a, b):
    return nc_mul(a, b) - nc_mul(b, a)


def realize(op, p, s=0):
    """Apply op to a polynomial in z, with optional weight shift s.

    Term (i, j) acts as (z d/dz + s/2)^i applied after
    (z d^2/dz^2 + (beta+s+1) d/dz)^j.
    """
    if not isinstance(p, UniPoly) or p.var != "z":
        raise ValueError("realize acts on polynomials in 'z'")
    s = as_fraction(s)
    half = s / 2
    b1 = op.beta + s + 1
    z = UniPoly.variable("z")

    def d1(w):
        return z * w.derivative() + half * w

    def d2(w):
        dw = w.derivative()
        return z * dw.derivative() + b1 * dw

    by_j = {}
    for (i, j), c in op.terms.items():
        by_j.setdefault(j, []).append((i, c))
    out = UniPoly.zero("z")
    w = p
    for j in range(max(by_j, default=0) + 1):
        if j > 0:
            w = d2(w)
        for i, c in by_j.get(j, ()):
            v = w
            for _ in range(i):
                v = d1(v)
            out = out + c * v
    return out


def jacobi_operator(alpha, beta):
    """The classical hypergeometric operator D1^2 + (alpha+beta+1) D1 - D2.

    Realized at weight shift s it acts on p z^{s/2} conjugated back, with
    eigenvalue lambda^{alpha+beta}_{n+s/2} on degree-n polynomials of the
    (alpha, beta+s) family.
    """
    alpha, beta = as_fraction(alpha), as_fraction(beta)
    return NCOp(beta, {(2, 0): 1, (1, 0): alpha + beta + 1, (0, 1): -1})


def jacobi_sum_operator(r, alpha, beta):
    """Differential operator B with sum_{s=0}^{n} [r(s) p_s - r(-s-a-b) p_{s-1}] = B p_n.

    r is a polynomial in 'n'.  Writing r(n) = rbar(2n+alpha+beta), the
    operator is assembled from powers of the degree-raising pair: odd
    powers of 2n+alpha+beta come from 2 D1 + (alpha+beta), even ones from
    (Bp'^2 - 4 Bp'') built out of the hypergeometric operator, both acting
    on the telescoping differences p_n - p_{n-1}.
    """
    if r.var != "n":
        raise ValueError("r must be a polynomial in 'n'")
    alpha, beta = as_fraction(alpha), as_fraction(beta)
    ab = alpha + beta
    rbar = substitute_affine(r, Fraction(1, 2), -ab / 2)  # rbar(2n+ab) == r(n)
    B = jacobi_operator(alpha, beta)
    odd = 2 * NCOp.d1(beta) + NCOp(beta, {(0, 0): ab})
    B3 = B - odd
    C = (B + B3) ** 2 - 4 * nc_mul(B, B3)
    out = NCOp.zero(beta)
    for j, c in enumerate(rbar.coeffs):
        if not c:
            continue
        half = C ** (j // 2)
        term = nc_mul(odd, half) if j % 2 else half
        out = out + c * term
    return out


def fit_operator(f, spec, qfam, order=None):
    """Fit the unique normal-form operator with B q_n = f(lambda_{n-k/2}) q_n.

    f is a polynomial in 't'; the order bound defaults to 2*deg f.  The
    linear system imposes the eigen-equations for n = 0..(#unknowns + 2)
    and the result is re-verified on five extra indices.  Inconsistency
    means f is not in the algebra (or the order bound is too small);
    underdetermination means the bound admits spurious freedom.  Both
    raise FitError rather than guessing.
    """
    if f.var != "t":
        raise ValueError("f must be a polynomial in 't' (the spectral variable)")
    if order is None:
        order = 2 * max(f.degree, 0)
    ab = spec.alpha + spec.beta
    kk = Fraction(spec.k, 2)
    monos = [(i, j) for j in range(order // 2 + 1) for i in range(order - 2 * j + 1)]
    U = len(monos)

    _d1 = NCOp.d1(spec.beta)
    _d2 = NCOp.d2(spec.beta)

    def applied(n):
        q = qfam.q(n)
        cols = {}
        w = q
        for j in range(order // 2 + 1):
            if j > 0:
                w = realize(_d2, w)
            v = w
            for i in range(order - 2 * j + 1):
                cols[(i, j)] = v
                v = realize(_d1, v)
        return q, cols

    rows, rhs = [], []
    for n in range(U + 3):
        q, cols = applied(n)
        target = f(eigenvalue(ab, n - kk)) * q
        for power in range(n + 1):
            rows.append([cols[m].coeff(power) for m in monos])
            rhs.append(target.coeff(power))
    res = solve_exact(LinearProblem(rows, rhs))
    if res.status == "inconsistent":
        raise FitError(
            f"no operator of order {order} has the requested eigenvalues "
            "(f outside the algebra, or order bound too small)"
        )
    if res.status == "affine":
        raise FitError(f"order bound {order} leaves the fit underdetermined")
    op = NCOp(spec.beta, dict(zip(monos, res.solution)))
    for n in range(U + 3, U + 8):
        q = qfam.q(n)
        if realize(op, q) != f(eigenvalue(ab, n - kk)) * q:
            raise FitError(f"fitted operator fails verification at n={n}")
    return op
