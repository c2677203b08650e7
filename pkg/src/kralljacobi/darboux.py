"""Darboux-transformed Jacobi families built from Casorati determinants.

A transform is specified by an integer alpha >= 1, beta > -1, a level
1 <= k <= alpha, and free constants a = (a_0, ..., a_{k-1}).  The kernel
sequences psi^(j) are polynomials in the index n; tau is their Casorati
determinant, and the transformed family q_n mixes the psi rows with a
final row of classical Jacobi polynomials.  Everything is exact; whenever
tau vanishes at a needed index the construction is degenerate and fails
loudly instead of producing a shorter polynomial.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .discrete import casorati
from .jacobi import (
    JacobiParams,
    beta_moment,
    eigenvalue_poly,
    jacobi_poly,
    poch,
    poch_poly,
    recurrence_coeffs,
)
from .linalg import laplace_det
from .rationals import as_fraction
from .unipoly import UniPoly, express_in_quadratic, polydivrem, substitute_affine

__all__ = [
    "DarbouxSpec",
    "DegeneracyError",
    "psi",
    "TauData",
    "tau",
    "epsilon_poly",
    "q_poly",
    "q_shifted",
    "QFamily",
    "TridiagOp",
    "fit_recurrence",
    "fit_three_term",
    "intertwine_matrices",
    "intertwine_check",
    "orthogonality_k1",
]


class DegeneracyError(ValueError):
    """tau vanished at an index the construction needs."""


@dataclass(frozen=True)
class DarbouxSpec:
    alpha: int
    beta: Fraction
    k: int
    a: tuple

    def __post_init__(self):
        if not isinstance(self.alpha, int) or self.alpha < 1:
            raise ValueError(f"alpha must be an integer >= 1, got {self.alpha!r}")
        object.__setattr__(self, "beta", as_fraction(self.beta))
        if self.beta <= -1:
            raise ValueError(f"beta must exceed -1, got {self.beta}")
        if not isinstance(self.k, int) or not 1 <= self.k <= self.alpha:
            raise ValueError(f"need 1 <= k <= alpha, got k={self.k!r}, alpha={self.alpha}")
        object.__setattr__(self, "a", tuple(as_fraction(x) for x in self.a))
        if len(self.a) != self.k:
            raise ValueError(f"need {self.k} free constants, got {len(self.a)}")

    @property
    def ab(self):
        return self.alpha + self.beta


def _n_poly(shift):
    return UniPoly("n", (as_fraction(shift), 1))


@lru_cache(maxsize=None)
def _phi1(l, alpha, beta):
    if l >= alpha:
        raise ValueError(f"first kernel branch undefined for l={l} >= alpha={alpha}")
    den = poch(1, l) * poch(1 - alpha, l)
    sign = Fraction(-1) ** l
    return sign * poch_poly(_n_poly(1), l) * poch_poly(_n_poly(alpha + beta) * -1, l) * (1 / den)


@lru_cache(maxsize=None)
def _phi2(j, alpha, beta):
    num = (
        poch_poly(_n_poly(1), alpha)
        * poch_poly(_n_poly(beta + 1), alpha)
        * poch_poly(_n_poly(0) * -1, j)
        * poch_poly(_n_poly(alpha + beta + 1), j)
    )
    den = poch(1, j) * poch(1, alpha) * poch(1 + alpha, j) * poch(1 + beta, alpha)
    return Fraction(-1) ** j * num * (1 / den)


@lru_cache(maxsize=None)
def psi(j, spec):
    """Kernel sequence psi^(j) as a polynomial in 'n' (0 <= j <= k-1)."""
    if not 0 <= j <= spec.k - 1:
        raise ValueError(f"psi index {j} outside 0..{spec.k - 1}")
    out = _phi2(j, spec.alpha, spec.beta)
    for l in range(j + 1):
        out = out + spec.a[j - l] * _phi1(l, spec.alpha, spec.beta)
    return out


def epsilon_poly(k, alpha, beta):
    """The parity factor of tau: 1, or the eigenvalue gap 2n+alpha+beta-k+2."""
    if k % 4 in (0, 1):
        return UniPoly.const("n", 1)
    return UniPoly("n", (as_fraction(alpha) + as_fraction(beta) - k + 2, 2))


@dataclass(frozen=True)
class TauData:
    tau: UniPoly  # in 'n'
    tau_bar: UniPoly  # in 't', tau == eps * tau_bar(lambda_{n-(k-1)/2})
    eps: UniPoly  # in 'n'


@lru_cache(maxsize=None)
def tau(spec):
    """Casorati determinant of the kernel sequences, with its even/odd split."""
    t = casorati([psi(j, spec) for j in range(spec.k)])
    eps = epsilon_poly(spec.k, spec.alpha, spec.beta)
    if eps.degree > 0:
        core, rem = polydivrem(t, eps)
        if not rem.is_zero():
            raise ArithmeticError("tau is not divisible by its parity factor (symmetry bug)")
    else:
        core = t
    quad = eigenvalue_poly(spec.ab, -Fraction(spec.k - 1, 2))
    tau_bar = express_in_quadratic(core, quad, "t")
    return TauData(t, tau_bar, eps)


def _jacobi_or_zero(n, prm):
    return jacobi_poly(n, prm) if n >= 0 else UniPoly.zero("z")


def _q_det(n, s, spec):
    k = spec.k
    td = tau(spec)
    tprev = td.tau(Fraction(n - 1) + Fraction(s, 2))
    if tprev == 0:
        raise DegeneracyError(
            f"tau vanishes at index {n - 1}{f' + {s}/2' if s else ''}; "
            f"the transform is degenerate there for {spec}"
        )
    prm = JacobiParams(spec.alpha, spec.beta + s)
    half = Fraction(s, 2)
    rows = []
    for i in range(k):
        p = psi(i, spec)
        rows.append([p(n - j + 1 + half) for j in range(1, k + 2)])
    rows.append([_jacobi_or_zero(n - j + 1, prm) for j in range(1, k + 2)])
    det = laplace_det(rows)
    if not isinstance(det, UniPoly):
        det = UniPoly.const("z", det)
    expect_lc = Fraction(-1) ** k * tprev * jacobi_poly(n, prm).lc
    if det.degree != n or det.lc != expect_lc:
        raise ArithmeticError(f"transformed polynomial at n={n} has the wrong shape")
    return det


def q_poly(n, spec):
    """Transformed polynomial q_n: Casorati of psi^(0..k-1) and the Jacobi row."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("q_poly needs an integer n >= 0")
    return _q_det(n, 0, spec)


def q_shifted(n, s, spec):
    """Weight-shifted transform: psi rows moved by s/2, Jacobi row at beta+s."""
    if not isinstance(n, int) or n < 0 or not isinstance(s, int) or s < 0:
        raise ValueError("q_shifted needs integers n >= 0 and s >= 0")
    return _q_det(n, s, spec)


class QFamily:
    """Memoizing view of one spec's q_n and q_shifted families (not thread-safe)."""

    def __init__(self, spec):
        self.spec = spec
        self._cache = {}

    def q(self, n):
        key = (n, 0)
        if key not in self._cache:
            self._cache[key] = q_poly(n, self.spec)
        return self._cache[key]

    def shifted(self, n, s):
        key = (n, s)
        if key not in self._cache:
            self._cache[key] = q_shifted(n, s, self.spec)
        return self._cache[key]


@dataclass(frozen=True)
class TridiagOp:
    """Three-term recurrence data: z q_n = a_n q_{n+1} + b_n q_n + c_n q_{n-1}."""

    a: tuple
    b: tuple
    c: tuple  # c[0] == 0 by the q_{-1} = 0 convention

    def matrix(self, size):
        out = [[Fraction(0)] * size for _ in range(size)]
        for n in range(min(size, len(self.a))):
            out[n][n] = self.b[n]
            if n + 1 < size:
                out[n][n + 1] = self.a[n]
            if n >= 1:
                out[n][n - 1] = self.c[n]
        return out


def fit_three_term(poly_at, N):
    """Fit z p_n = a_n p_{n+1} + b_n p_n + c_n p_{n-1} by coefficient comparison.

    poly_at(n) must return a degree-n polynomial in 'z' (n = -1 allowed,
    returning zero).  Exact and over-determined: any residual raises.
    """
    z = UniPoly.variable("z")
    A, B, C = [], [], []
    for n in range(N + 1):
        qn, qup = poly_at(n), poly_at(n + 1)
        target = z * qn
        an = target.coeff(n + 1) / qup.coeff(n + 1)
        r = target - an * qup
        bn = r.coeff(n) / qn.coeff(n)
        r = r - bn * qn
        if n > 0:
            qdn = poly_at(n - 1)
            cn = r.coeff(n - 1) / qdn.coeff(n - 1)
            r = r - cn * qdn
        else:
            cn = Fraction(0)
        if not r.is_zero():
            raise ArithmeticError(f"three-term fit inconsistent at n={n}")
        if an == 0 or (n > 0 and cn == 0):
            raise DegeneracyError(f"zero off-diagonal recurrence coefficient at n={n}")
        A.append(an)
        B.append(bn)
        C.append(cn)
    return TridiagOp(tuple(A), tuple(B), tuple(C))


def fit_recurrence(spec, N):
    """Three-term recurrence of the transformed family up to index N."""
    fam = QFamily(spec)
    return fit_three_term(lambda n: fam.q(n), N)


def intertwine_matrices(spec, N):
    """(L, Lhat, Q) truncations: L classical, Lhat transformed, Q the lowering map.

    Q has bandwidth k+1: row n holds the signed psi-minors that express q_n
    in terms of p_{n-k}..p_n.
    """
    k = spec.k
    prm = JacobiParams(spec.alpha, spec.beta)
    size = N + 1
    L = [[Fraction(0)] * size for _ in range(size)]
    for n in range(size):
        An, Bn, Cn = recurrence_coeffs(n, prm)
        L[n][n] = Bn
        if n + 1 < size:
            L[n][n + 1] = An
        if n >= 1:
            L[n][n - 1] = Cn
    Lhat = fit_recurrence(spec, N - 1).matrix(size)
    Q = [[Fraction(0)] * size for _ in range(size)]
    psis = [psi(i, spec) for i in range(k)]
    for n in range(size):
        grid = [[p(n - j + 1) for j in range(1, k + 2)] for p in psis]
        for j in range(1, k + 2):
            col = n - j + 1
            if col < 0:
                continue
            minor = [row[:j - 1] + row[j:] for row in grid]
            sign = Fraction(-1) ** (k + 1 + j)
            Q[n][col] = sign * laplace_det(minor)
    return L, Lhat, Q


def _mat_mul(X, Y):
    size = len(X)
    out = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for l in range(size):
            x = X[i][l]
            if x:
                row = Y[l]
                oi = out[i]
                for j in range(size):
                    if row[j]:
                        oi[j] += x * row[j]
    return out


def intertwine_check(spec, N):
    """Exact Lhat Q == Q L on the rows unaffected by truncation (0..N-k-1)."""
    L, Lhat, Q = intertwine_matrices(spec, N)
    left = _mat_mul(Lhat, Q)
    right = _mat_mul(Q, L)
    return all(left[n] == right[n] for n in range(N - spec.k))


def orthogonality_k1(spec, n, m, s=0):
    """Sobolev-type pairing of q_n, q_m for the alpha = k = 1 family.

    Integral part against z^{beta+s} on [0,1] (scaled by the s-dependent
    prefactor) plus the point mass at z = 1; vanishes exactly for n != m.
    """
    if spec.k != 1 or spec.alpha != 1:
        raise ValueError("the closed-form pairing needs alpha = k = 1")
    beta, a0 = spec.beta, spec.a[0]
    qn = q_shifted(n, s, spec)
    qm = q_shifted(m, s, spec)
    P = qn * qm
    cont = sum(
        (P.coeff(c) * beta_moment(beta + s + c, 0) for c in range(P.degree + 1)),
        Fraction(0),
    )
    pref = 1 + (s * s + 2 * beta * s) / (4 * a0 * (beta + 1))
    return pref * cont + qn(1) * qm(1) / (a0 * (beta + 1))
