"""Verification suites: frozen oracles and exact property checks.

Every check compares rational values for strict equality; there are no
tolerances anywhere.  A CheckResult carries the check name, a pass flag,
and a witness string holding the first failing instance (exact values) so
any failure is reproducible from the report alone.

The module-level suites mirror the package layout (core polynomial layer,
classical family, operator algebra, transformed family, eigenvalue
algebra, multivariate lift).  The thirteen check_* functions form the
acceptance gate and run at their full contracted sizes; the suites reuse
them at lighter sizes where that makes sense.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .darboux import (
    DarbouxSpec,
    DegeneracyError,
    QFamily,
    fit_recurrence,
    intertwine_matrices,
    intertwine_check,
    orthogonality_k1,
    q_poly,
    q_shifted,
    tau,
)
from .discrete import casorati, discrete_integral, wronskian_sum_identity
from .jacobi import (
    JacobiParams,
    beta_moment,
    eigenvalue,
    eigenvalue_poly,
    jacobi_poly,
    recurrence_coeffs,
)
from .krall import basis_up_to_degree, certificate_for, echelon_basis, element_from_g, is_member
from .linalg import LinearProblem, kernel_basis, solve_exact
from .mpoly import MPoly
from .multivariate import (
    apply_geometric,
    ball_integral,
    harmonic_basis,
    inner_product_kd,
    q_multivariate,
    realize_pde,
    sigma_dim,
    sphere_integral,
)
from .ncalg import NCOp, commutator, fit_operator, jacobi_operator, jacobi_sum_operator, nc_mul, realize
from .rationals import as_fraction
from .unipoly import UniPoly, polydivrem, substitute_affine

__all__ = [
    "CheckResult",
    "SUITES",
    "run_suite",
    "quadratic_generator",
    "cubic_generator",
    "quartic_operator_table",
    "check_operator_oracle",
    "check_algebra_generators",
    "check_bispectral_pair",
    "check_operator_commutativity",
    "check_intertwining",
    "check_orthogonality_point_mass",
    "check_summation_operator",
    "check_wronskian_summation",
    "check_tau_symmetry",
    "check_weighted_eigen",
    "check_multivariate_eigenbasis",
    "check_sobolev_orthogonality",
    "check_classical_identities",
    "acceptance_checks",
]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: str = ""


def _result(name, failures, note=""):
    """Collapse a failure list into a CheckResult; keep the first witnesses."""
    if failures:
        head = "; ".join(failures[:3])
        if len(failures) > 3:
            head += f"; ... {len(failures)} failures total"
        return CheckResult(name, False, head)
    return CheckResult(name, True, note)


# parameter points of the alpha = k = 1 worked family: (beta, a0)
K1_POINTS = (
    (Fraction(0), Fraction(1)),
    (Fraction(1), Fraction(2)),
    (Fraction(1, 2), Fraction(1, 3)),
)


def _spec_k1(beta, a0):
    return DarbouxSpec(1, as_fraction(beta), 1, (as_fraction(a0),))


def _bispectral_specs():
    """The one- and two-step transforms the bispectral checks run on."""
    return (
        DarbouxSpec(1, Fraction(0), 1, (Fraction(1),)),
        DarbouxSpec(2, Fraction(0), 2, (Fraction(1), Fraction(1))),
        DarbouxSpec(2, Fraction(1, 2), 2, (Fraction(1), Fraction(1))),
    )


def _label(spec):
    a = ",".join(str(x) for x in spec.a)
    return f"alpha={spec.alpha},beta={spec.beta},k={spec.k},a=({a})"


# ---------------------------------------------------------------------------
# frozen closed forms for the alpha = k = 1 family


def quadratic_generator(beta, a0):
    """Degree-2 generator of the eigenvalue algebra, closed form in (beta, a0)."""
    b, a = as_fraction(beta), as_fraction(a0)
    return UniPoly("t", (Fraction(0), (3 + 4 * a + 4 * b + 4 * a * b) / 2, Fraction(1)))


def cubic_generator(beta, a0):
    """Degree-3 generator of the eigenvalue algebra, closed form in (beta, a0)."""
    b, a = as_fraction(beta), as_fraction(a0)
    return UniPoly(
        "t",
        (
            Fraction(0),
            -(21 + 12 * a + 28 * b + 12 * a * b + 4 * b * b) / 16,
            (1 + 6 * a + 6 * b + 6 * a * b) / 4,
            Fraction(1),
        ),
    )


def quartic_operator_table(beta, a0):
    """The classical fourth-order operator attached to the degree-2 generator.

    Normal-form term table, frozen as an independent oracle for the fitter.
    """
    b, a = as_fraction(beta), as_fraction(a0)
    d1, d2 = NCOp.d1(b), NCOp.d2(b)
    one = NCOp.identity(b)
    return (
        d1 ** 4
        - 2 * nc_mul(d2, d1 ** 2)
        + d2 ** 2
        + 2 * (1 + b) * d1 ** 3
        - 2 * b * nc_mul(d2, d1)
        + (1 + 2 * a + 3 * b + 2 * a * b + b * b) * d1 ** 2
        - 2 * (1 + a + a * b) * d2
        + (1 + b) * (b + 2 * a * (1 + b)) * d1
        - Fraction(1, 16) * (3 + 2 * b) * (3 + 6 * b + 8 * a * (1 + b)) * one
    )


def _fit_low_degree_operators(spec, degree_max=4):
    """(f, B_f) for every algebra member of degree <= degree_max.

    Raises DegeneracyError when the transform is degenerate at an index the
    fit needs; callers decide how to report that.
    """
    qfam = QFamily(spec)
    return [(f, fit_operator(f, spec, qfam)) for f in basis_up_to_degree(spec, degree_max)]


# ---------------------------------------------------------------------------
# acceptance checks


def check_operator_oracle():
    """Fitted degree-2 operator equals the frozen fourth-order table."""
    failures = []
    for beta, a0 in K1_POINTS:
        spec = _spec_k1(beta, a0)
        fitted = fit_operator(quadratic_generator(beta, a0), spec, QFamily(spec))
        if fitted != quartic_operator_table(beta, a0):
            failures.append(f"(beta={beta},a0={a0}): fitted table differs from closed form")
    return _result("operator-oracle", failures)


def check_algebra_generators():
    """Degree-3 basis equals the echelonized span of {1, f2, f3}."""
    failures = []
    for beta, a0 in K1_POINTS:
        spec = _spec_k1(beta, a0)
        computed = basis_up_to_degree(spec, 3)
        ref = []
        for f in (UniPoly("t", (Fraction(1),)), quadratic_generator(beta, a0), cubic_generator(beta, a0)):
            ref.append([f.coeff(i) for i in range(4)])
        expected = echelon_basis(ref)
        if computed != expected:
            failures.append(f"(beta={beta},a0={a0}): basis {computed} != {expected}")
    return _result("algebra-generators", failures)


def check_bispectral_pair(n_max=15, degree_max=4):
    """Recurrence and differential eigen-equations hold simultaneously.

    Both sides of each identity are expanded as exact polynomials in z for
    every n <= n_max and every algebra member of degree <= degree_max.
    """
    failures = []
    z = UniPoly.variable("z")
    for spec in _bispectral_specs():
        label = _label(spec)
        try:
            qfam = QFamily(spec)
            rec = fit_recurrence(spec, n_max)
            for n in range(n_max + 1):
                lhs = z * qfam.q(n)
                rhs = rec.a[n] * qfam.q(n + 1) + rec.b[n] * qfam.q(n)
                if n:
                    rhs = rhs + rec.c[n] * qfam.q(n - 1)
                if lhs != rhs:
                    failures.append(f"{label}: recurrence residual at n={n}")
            for f, op in _fit_low_degree_operators(spec, degree_max):
                for n in range(n_max + 1):
                    ev = f(eigenvalue(spec.ab, n - Fraction(spec.k, 2)))
                    if realize(op, qfam.q(n)) != ev * qfam.q(n):
                        failures.append(f"{label}: eigen fails for degree-{f.degree} member at n={n}")
        except DegeneracyError as exc:
            failures.append(f"{label}: {exc}")
    return _result("bispectral-pair", failures)


def check_operator_commutativity(degree_max=4):
    """Fitted operators commute pairwise and respect products.

    Quantifies over the operators the bispectral check can fit; a transform
    that is degenerate (so fits nothing) is noted, not silently skipped.
    """
    failures = []
    notes = []
    for spec in _bispectral_specs():
        label = _label(spec)
        try:
            fitted = _fit_low_degree_operators(spec, degree_max)
        except DegeneracyError as exc:
            notes.append(f"{label} fits no operators: {exc}")
            continue
        qfam = QFamily(spec)
        for i, (f, bf) in enumerate(fitted):
            for h, bh in fitted[:i]:
                if commutator(bf, bh) != NCOp.zero(spec.beta):
                    failures.append(f"{label}: [B(deg {f.degree}), B(deg {h.degree})] != 0")
        for f, bf in fitted:
            for h, bh in fitted:
                prod = f * h
                if prod.degree > degree_max:
                    continue
                if fit_operator(prod, spec, qfam) != nc_mul(bf, bh):
                    failures.append(
                        f"{label}: product fit (deg {f.degree} * deg {h.degree}) is not the composition"
                    )
    return _result("operator-commutativity", failures, "; ".join(notes))


def check_intertwining(N=12):
    """Truncated matrix identity Lhat Q = Q L on the reliable rows."""
    failures = []
    for spec in _bispectral_specs():
        label = _label(spec)
        try:
            if not intertwine_check(spec, N):
                failures.append(f"{label}: truncated intertwining fails at N={N}")
        except DegeneracyError as exc:
            failures.append(f"{label}: {exc}")
    return _result("intertwining", failures)


def check_orthogonality_point_mass(n_max=8, s_max=4, n_max_shifted=6):
    """The point-mass pairing vanishes off the diagonal, plain and shifted."""
    failures = []
    for beta, a0 in K1_POINTS:
        spec = _spec_k1(beta, a0)
        for m in range(n_max + 1):
            for n in range(m):
                v = orthogonality_k1(spec, n, m)
                if v != 0:
                    failures.append(f"(beta={beta},a0={a0}): pairing(n={n},m={m}) = {v}")
        for s in range(1, s_max + 1):
            for m in range(n_max_shifted + 1):
                for n in range(m):
                    v = orthogonality_k1(spec, n, m, s)
                    if v != 0:
                        failures.append(f"(beta={beta},a0={a0},s={s}): pairing(n={n},m={m}) = {v}")
    return _result("orthogonality-point-mass", failures)


def check_summation_operator(degree_max=4, n_max=10):
    """Telescoping sums of the classical family are realized differentially.

    For every monomial profile r the constructed operator reproduces
    sum_{s=0}^{n} [r(s) p_s - r(-s-alpha-beta) p_{s-1}] exactly.
    """
    failures = []
    for alpha, beta in ((1, Fraction(0)), (2, Fraction(1, 2))):
        prm = JacobiParams(alpha, beta)
        ab = alpha + beta
        polys = [jacobi_poly(n, prm) for n in range(n_max + 1)]
        for deg in range(degree_max + 1):
            r = UniPoly("n", (0,) * deg + (1,))
            op = jacobi_sum_operator(r, alpha, beta)
            total = UniPoly.zero("z")
            for n in range(n_max + 1):
                total = total + r(n) * polys[n]
                if n:
                    total = total - r(-n - ab) * polys[n - 1]
                if realize(op, polys[n]) != total:
                    failures.append(f"(alpha={alpha},beta={beta}): r=n^{deg} fails at n={n}")
                    break
    return _result("summation-operator", failures)


def check_wronskian_summation(seed=0, count=200, k_values=(1, 2, 3, 4)):
    """Randomized instances of the determinant summation identity."""
    rng = random.Random(seed)
    failures = []
    for k in k_values:
        for trial in range(count):
            sources = [
                UniPoly(
                    "n",
                    tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(rng.randint(1, 3))),
                )
                for _ in range(k + 2)
            ]
            anchors = tuple(rng.randint(-2, 2) for _ in range(k + 1))
            n = rng.randint(3, 6)
            if not wronskian_sum_identity(sources, anchors, n):
                failures.append(f"k={k} trial={trial} seed={seed}")
                break
    return _result("wronskian-summation", failures)


def check_tau_symmetry(seed=0, draws=3):
    """tau is (anti)symmetric under the index involution and factors cleanly."""
    rng = random.Random(seed)
    failures = []
    for k in range(1, 5):
        for beta in (Fraction(0), Fraction(1, 2), Fraction(5, 3)):
            for _ in range(draws):
                a = tuple(Fraction(rng.randint(1, 8), rng.randint(1, 5)) for _ in range(k))
                spec = DarbouxSpec(k, beta, k, a)
                td = tau(spec)
                s = spec.ab - k + 1
                flipped = substitute_affine(td.tau, Fraction(-1), -(s + 1))
                sign = -1 if (k * (k - 1) // 2) % 2 else 1
                if flipped != sign * td.tau:
                    failures.append(f"{_label(spec)}: involution image is not ({sign})*tau")
                lam = eigenvalue_poly(spec.ab, -Fraction(k - 1, 2))
                if td.eps * td.tau_bar.compose(lam) != td.tau:
                    failures.append(f"{_label(spec)}: parity factorization broken")
    return _result("tau-symmetry", failures)


def check_weighted_eigen(s_max=4, n_max=8, degree_max=4):
    """Fitted operators keep their eigen-equations on the shifted families.

    Same referential domain as the commutativity check: operators fitted by
    the bispectral check, applied through the weight-conjugated realization.
    """
    failures = []
    notes = []
    for spec in _bispectral_specs():
        label = _label(spec)
        try:
            fitted = _fit_low_degree_operators(spec, degree_max)
        except DegeneracyError as exc:
            notes.append(f"{label} fits no operators: {exc}")
            continue
        qfam = QFamily(spec)
        for s in range(s_max + 1):
            for n in range(n_max + 1):
                qh = qfam.shifted(n, s)
                for f, op in fitted:
                    ev = f(eigenvalue(spec.ab, n + Fraction(s - spec.k, 2)))
                    if realize(op, qh, s) != ev * qh:
                        failures.append(f"{label}: shifted eigen fails at n={n}, s={s}, deg {f.degree}")
    return _result("weighted-eigen", failures, "; ".join(notes))


def check_multivariate_eigenbasis(n_max=6, dims=(2, 3)):
    """The radial-harmonic products diagonalize the lifted operators."""
    failures = []
    for d in dims:
        beta = Fraction(d, 2) - 1
        spec = DarbouxSpec(1, beta, 1, (Fraction(1),))
        qfam = QFamily(spec)
        gens = (quadratic_generator(beta, 1), cubic_generator(beta, 1))
        ops = [(f, fit_operator(f, spec, qfam)) for f in gens]
        for n in range(n_max + 1):
            total = 0
            for i in range(n // 2 + 1):
                l = n - 2 * i
                total += sigma_dim(d, l)
                for j in range(1, sigma_dim(d, l) + 1):
                    Q = q_multivariate(n, i, j, spec, d)
                    for f, op in ops:
                        ev = f(eigenvalue(spec.ab, Fraction(n - 1, 2)))
                        if realize_pde(op, Q, d) != Q * ev:
                            failures.append(f"d={d}: eigen fails at (n,i,j)=({n},{i},{j}), deg {f.degree}")
            if total != comb(n + d - 1, d - 1):
                failures.append(f"d={d}: basis count at degree {n} is {total}")
    return _result("multivariate-eigenbasis", failures)


def check_sobolev_orthogonality(degree_max=5, d=2, a0_values=(Fraction(1), Fraction(2), Fraction(1, 3))):
    """All distinct basis members are orthogonal for the mixed inner product."""
    failures = []
    beta = Fraction(d, 2) - 1
    for a0 in (as_fraction(x) for x in a0_values):
        spec = DarbouxSpec(1, beta, 1, (a0,))
        fam = []
        for n in range(degree_max + 1):
            for i in range(n // 2 + 1):
                for j in range(1, sigma_dim(d, n - 2 * i) + 1):
                    fam.append(((n, i, j), q_multivariate(n, i, j, spec, d)))
        for x in range(len(fam)):
            for y in range(x):
                v = inner_product_kd(fam[x][1], fam[y][1], d, a0)
                if v != 0:
                    failures.append(f"a0={a0}: <Q{fam[x][0]}, Q{fam[y][0]}> = {v}")
    if d == 2:
        # the radial pair of the worked example, written out explicitly
        spec1 = DarbouxSpec(1, Fraction(0), 1, (Fraction(1),))
        lo = MPoly.const(2, Fraction(-1))
        hi = MPoly.const(2, Fraction(9)) - 12 * MPoly.norm_sq(2)
        if q_multivariate(0, 0, 1, spec1, 2) != lo or q_multivariate(2, 1, 1, spec1, 2) != hi:
            failures.append("radial pair polynomials differ from -1 and 9-12|x|^2")
        if inner_product_kd(lo, hi, 2, Fraction(1)) != 0:
            failures.append("radial pair is not orthogonal")
    return _result("sobolev-orthogonality", failures)


CLASSICAL_GRID = (
    (Fraction(0), Fraction(1)),
    (Fraction(1), Fraction(0)),
    (Fraction(2), Fraction(1, 2)),
    (Fraction(1, 2), Fraction(2)),
)


def check_classical_identities(n_max=12, s_max=4):
    """Eigen-equation, three-term recurrence, and raising identities."""
    failures = []
    z = UniPoly.variable("z")
    for alpha, beta in CLASSICAL_GRID:
        prm = JacobiParams(alpha, beta)
        ab = alpha + beta
        op = jacobi_operator(alpha, beta)
        polys = [jacobi_poly(n, prm) for n in range(n_max + 2)]
        for n in range(n_max + 1):
            if realize(op, polys[n]) != eigenvalue(ab, n) * polys[n]:
                failures.append(f"(alpha={alpha},beta={beta}): eigen fails at n={n}")
            A, B, C = recurrence_coeffs(n, prm)
            rhs = A * polys[n + 1] + B * polys[n]
            if n:
                rhs = rhs + C * polys[n - 1]
            if z * polys[n] != rhs:
                failures.append(f"(alpha={alpha},beta={beta}): recurrence fails at n={n}")
            prev = polys[n - 1] if n else UniPoly.zero("z")
            diff, tot = polys[n] - prev, polys[n] + prev
            if 2 * z * diff.derivative() + ab * diff != (2 * n + ab) * tot:
                failures.append(f"(alpha={alpha},beta={beta}): raising identity fails at n={n}")
        raising = NCOp(beta, {(1, 0): Fraction(2), (0, 0): ab})
        for s in range(s_max + 1):
            shifted = JacobiParams(alpha, beta + s)
            for n in range(n_max + 1):
                pn = jacobi_poly(n, shifted)
                prev = jacobi_poly(n - 1, shifted) if n else UniPoly.zero("z")
                lhs = realize(raising, pn - prev, s)
                if lhs != (2 * (n + Fraction(s, 2)) + ab) * (pn + prev):
                    failures.append(f"(alpha={alpha},beta={beta}): weighted raising fails at n={n}, s={s}")
    return _result("classical-identities", failures)


def acceptance_checks(seed=0):
    """The full acceptance gate, in contract order."""
    return [
        check_operator_oracle(),
        check_algebra_generators(),
        check_bispectral_pair(),
        check_operator_commutativity(),
        check_intertwining(),
        check_orthogonality_point_mass(),
        check_summation_operator(),
        check_wronskian_summation(seed),
        check_tau_symmetry(seed),
        check_weighted_eigen(),
        check_multivariate_eigenbasis(),
        check_sobolev_orthogonality(),
        check_classical_identities(),
    ]


# ---------------------------------------------------------------------------
# module suites


def _rand_unipoly(rng, var, max_deg, lo=-5, hi=5, den=3):
    deg = rng.randint(0, max_deg)
    coeffs = tuple(Fraction(rng.randint(lo, hi), rng.randint(1, den)) for _ in range(deg + 1))
    return UniPoly(var, coeffs)


def suite_exact_core(seed=0):
    rng = random.Random(seed)
    out = []

    failures = []
    for _ in range(30):
        f = _rand_unipoly(rng, "z", 6)
        g = _rand_unipoly(rng, "z", 3)
        if g.is_zero():
            continue
        q, r = polydivrem(f, g)
        if q * g + r != f or r.degree >= g.degree:
            failures.append(f"f={f.coeffs}, g={g.coeffs}")
    out.append(_result("core-division-roundtrip", failures))

    failures = []
    f = _rand_unipoly(rng, "n", 3)
    for m in range(-4, 6):
        for n in range(-4, 6):
            if discrete_integral(f, m, n) != f(n) + discrete_integral(f, m, n - 1):
                failures.append(f"m={m}, n={n}")
    out.append(_result("core-summation-recursion", failures))

    failures = []
    for s in (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(5, 3)):
        p = _rand_unipoly(rng, "n", 4)
        once = substitute_affine(p, Fraction(-1), -(s + 1))
        if substitute_affine(once, Fraction(-1), -(s + 1)) != p:
            failures.append(f"s={s}")
    out.append(_result("core-involution", failures))

    failures = []
    for trial in range(10):
        k = rng.randint(2, 4)
        sources = [_rand_unipoly(rng, "n", 2) for _ in range(k)]
        i, j = rng.sample(range(k), 2)
        swapped = list(sources)
        swapped[i], swapped[j] = swapped[j], swapped[i]
        if casorati(swapped) != -casorati(sources):
            failures.append(f"trial={trial}")
        n = rng.randint(-2, 4)
        if casorati(swapped, n) != -casorati(sources, n):
            failures.append(f"trial={trial} at n={n}")
    out.append(_result("core-casorati-alternating", failures))

    out.append(
        CheckResult(
            "core-wronskian-summation",
            check_wronskian_summation(seed, count=30, k_values=(1, 2, 3)).passed,
        )
    )

    failures = []
    for trial in range(12):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        A = [[Fraction(rng.randint(-4, 4)) for _ in range(cols)] for _ in range(rows)]
        x = [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(cols)]
        b = [sum(A[i][j] * x[j] for j in range(cols)) for i in range(rows)]
        res = solve_exact(LinearProblem(A, b))
        if res.status == "inconsistent":
            failures.append(f"trial={trial}: consistent system reported inconsistent")
            continue
        sol = res.solution
        if any(sum(A[i][j] * sol[j] for j in range(cols)) != b[i] for i in range(rows)):
            failures.append(f"trial={trial}: returned vector does not solve the system")
        for v in kernel_basis(A):
            if any(sum(A[i][j] * v[j] for j in range(cols)) != 0 for i in range(rows)):
                failures.append(f"trial={trial}: kernel vector not annihilated")
    out.append(_result("core-linear-solve", failures))
    return out


def suite_jacobi(seed=0):
    out = []
    grid = [(Fraction(a), Fraction(b)) for a in (0, 1, 2, Fraction(1, 2)) for b in (0, 1, 2, Fraction(1, 2))]

    failures = []
    for alpha, beta in grid:
        prm = JacobiParams(alpha, beta)
        op = jacobi_operator(alpha, beta)
        for n in range(16):
            p = jacobi_poly(n, prm)
            if realize(op, p) != eigenvalue(alpha + beta, n) * p:
                failures.append(f"(alpha={alpha},beta={beta},n={n})")
    out.append(_result("jacobi-eigen-equation", failures))

    out.append(CheckResult("jacobi-classical-identities", check_classical_identities(12, 4).passed))

    failures = []
    for alpha in (0, 1, 2):
        for beta in (Fraction(0), Fraction(1), Fraction(1, 2)):
            prm = JacobiParams(alpha, beta)
            polys = [jacobi_poly(n, prm) for n in range(9)]
            for m in range(9):
                for n in range(m):
                    P = polys[n] * polys[m]
                    v = sum((P.coeff(c) * beta_moment(beta + c, alpha) for c in range(P.degree + 1)), Fraction(0))
                    if v != 0:
                        failures.append(f"(alpha={alpha},beta={beta}): <p_{n},p_{m}> = {v}")
            for n in range(6):
                P = polys[n] * polys[n]
                v = sum((P.coeff(c) * beta_moment(beta + c, alpha) for c in range(P.degree + 1)), Fraction(0))
                if v <= 0:
                    failures.append(f"(alpha={alpha},beta={beta}): |p_{n}|^2 = {v}")
    out.append(_result("jacobi-weighted-orthogonality", failures))

    failures = []
    if beta_moment(Fraction(1, 2), 2) != Fraction(16, 105):
        failures.append(f"beta_moment(1/2, 2) = {beta_moment(Fraction(1, 2), 2)}")
    if beta_moment(Fraction(3), 0) != Fraction(1, 4):
        failures.append(f"beta_moment(3, 0) = {beta_moment(Fraction(3), 0)}")
    out.append(_result("jacobi-moment-oracles", failures))
    return out


def _rand_ncop(rng, beta, max_i=3, max_j=2):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        key = (rng.randint(0, max_i), rng.randint(0, max_j))
        terms[key] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return NCOp(beta, terms)


def suite_operator_algebra(seed=0):
    rng = random.Random(seed)
    out = []

    failures = []
    for trial in range(25):
        beta = rng.choice((Fraction(0), Fraction(1, 2)))
        A, B = _rand_ncop(rng, beta), _rand_ncop(rng, beta)
        p = _rand_unipoly(rng, "z", 5)
        if realize(nc_mul(A, B), p) != realize(A, realize(B, p)):
            failures.append(f"trial={trial}: composition mismatch")
        C = _rand_ncop(rng, beta)
        if nc_mul(A, nc_mul(B, C)) != nc_mul(nc_mul(A, B), C):
            failures.append(f"trial={trial}: associativity mismatch")
    out.append(_result("operator-normal-form-homomorphism", failures))

    failures = []
    for trial in range(25):
        beta = rng.choice((Fraction(0), Fraction(1, 2)))
        A = _rand_ncop(rng, beta)
        if not A.terms:
            continue
        if all(realize(A, UniPoly("z", (0,) * m + (1,))).is_zero() for m in range(A.order + 2)):
            failures.append(f"trial={trial}: nonzero table annihilates all low monomials")
    out.append(_result("operator-realization-injective", failures))

    spec = _spec_k1(0, 1)
    qfam = QFamily(spec)
    f2 = quadratic_generator(0, 1)
    f3 = cubic_generator(0, 1)
    b2 = fit_operator(f2, spec, qfam)
    b3 = fit_operator(f3, spec, qfam)

    failures = []
    for n in range(16):
        ev = f2(eigenvalue(spec.ab, n - Fraction(1, 2)))
        if realize(b2, qfam.q(n)) != ev * qfam.q(n):
            failures.append(f"n={n}")
    out.append(_result("operator-eigen-equation", failures))

    failures = []
    if fit_operator(f2 + f3, spec, qfam) != b2 + b3:
        failures.append("sum fit differs from operator sum")
    if fit_operator(f2 * f2, spec, qfam) != nc_mul(b2, b2):
        failures.append("product fit differs from operator square")
    if commutator(b2, b3) != NCOp.zero(spec.beta):
        failures.append("generators do not commute")
    out.append(_result("operator-algebra-homomorphism", failures))

    out.append(CheckResult("operator-summation", check_summation_operator(3, 8).passed))
    out.append(CheckResult("operator-weighted-eigen", check_weighted_eigen(4, 6, 2).passed))

    failures = []
    if f2(Fraction(-3, 4)) != Fraction(-33, 16):
        failures.append(f"f2(-3/4) = {f2(Fraction(-3, 4))}")
    if realize(b2, qfam.q(0)) != UniPoly("z", (Fraction(33, 16),)):
        failures.append("operator image of q_0 is not 33/16")
    out.append(_result("operator-spot-values", failures))
    return out


def suite_darboux(seed=0):
    out = []
    spec1 = _spec_k1(0, 1)
    spec2 = DarbouxSpec(2, Fraction(1, 2), 2, (Fraction(1), Fraction(1)))

    failures = []
    z = UniPoly.variable("z")
    for spec in (spec1, spec2):
        qfam = QFamily(spec)
        rec = fit_recurrence(spec, 8)
        for n in range(9):
            rhs = rec.a[n] * qfam.q(n + 1) + rec.b[n] * qfam.q(n)
            if n:
                rhs = rhs + rec.c[n] * qfam.q(n - 1)
            if z * qfam.q(n) != rhs:
                failures.append(f"{_label(spec)}: recurrence residual at n={n}")
        for f, op in _fit_low_degree_operators(spec, 3):
            for n in range(9):
                ev = f(eigenvalue(spec.ab, n - Fraction(spec.k, 2)))
                if realize(op, qfam.q(n)) != ev * qfam.q(n):
                    failures.append(f"{_label(spec)}: eigen fails at n={n}, deg {f.degree}")
    out.append(_result("darboux-bispectral-pair", failures))

    failures = []
    for spec in (spec1, spec2):
        td = tau(spec)
        prm = JacobiParams(spec.alpha, spec.beta)
        for n in range(11):
            q = q_poly(n, spec)
            if q.degree != n:
                failures.append(f"{_label(spec)}: deg q_{n} = {q.degree}")
                continue
            lead = (-1) ** spec.k * td.tau(n - 1) * jacobi_poly(n, prm).coeff(n)
            if q.coeff(n) != lead:
                failures.append(f"{_label(spec)}: leading coefficient of q_{n}")
    out.append(_result("darboux-degrees", failures))

    out.append(CheckResult("darboux-tau-symmetry", check_tau_symmetry(seed, draws=2).passed))

    failures = []
    for spec in (spec1, spec2):
        for n in range(9):
            if q_shifted(n, 0, spec) != q_poly(n, spec):
                failures.append(f"{_label(spec)}: n={n}")
    out.append(_result("darboux-shift-consistency", failures))

    failures = []
    for beta, a0 in ((Fraction(0), Fraction(1)), (Fraction(1, 2), Fraction(1, 3))):
        spec = _spec_k1(beta, a0)
        for s in range(5):
            a0s = (4 * a0 + 4 * a0 * beta + 2 * beta * s + s * s) / (4 * (1 + beta + s))
            factor = Fraction(1 + beta + s) / (1 + beta)
            other = _spec_k1(beta + s, a0s)
            for n in range(6):
                if q_shifted(n, s, spec) != factor * q_poly(n, other):
                    failures.append(f"(beta={beta},a0={a0}): s={s}, n={n}")
    out.append(_result("darboux-shift-factorization", failures))

    out.append(CheckResult("darboux-orthogonality", check_orthogonality_point_mass(5, 2, 4).passed))

    failures = []
    degenerate = DarbouxSpec(2, Fraction(0), 2, (Fraction(1), Fraction(1)))
    try:
        q_poly(0, degenerate)
        failures.append("degenerate q_0 did not raise")
    except DegeneracyError as exc:
        if "-1" not in str(exc):
            failures.append(f"error does not name the failing index: {exc}")
    if q_poly(1, degenerate).degree != 1:
        failures.append("q_1 at the degenerate point should still have degree 1")
    out.append(_result("darboux-degeneracy-detection", failures))

    failures = []
    if not intertwine_check(spec1, 10):
        failures.append("one-step transform fails at N=10")
    if not intertwine_check(spec2, 10):
        failures.append("two-step transform fails at N=10")
    L, Lhat, Q = intertwine_matrices(spec1, 8)
    Q[3][2] += 1
    size = len(Q)
    bad = [
        [sum(Lhat[i][l] * Q[l][j] for l in range(size)) - sum(Q[i][l] * L[l][j] for l in range(size)) for j in range(size)]
        for i in range(size)
    ]
    if all(x == 0 for row in bad[: 8 - spec1.k] for x in row):
        failures.append("perturbed lowering matrix still satisfies the identity")
    out.append(_result("darboux-intertwining", failures))
    return out


def suite_krall_algebra(seed=0):
    rng = random.Random(seed)
    out = []
    pairs = (
        (Fraction(0), Fraction(1)),
        (Fraction(1), Fraction(2)),
        (Fraction(1, 2), Fraction(1, 3)),
        (Fraction(5, 3), Fraction(3, 2)),
        (Fraction(2), Fraction(5)),
    )

    failures = []
    for beta, a0 in pairs:
        spec = _spec_k1(beta, a0)
        ref = [
            [UniPoly("t", (Fraction(1),)).coeff(i) for i in range(4)],
            [quadratic_generator(beta, a0).coeff(i) for i in range(4)],
            [cubic_generator(beta, a0).coeff(i) for i in range(4)],
        ]
        if basis_up_to_degree(spec, 3) != echelon_basis(ref):
            failures.append(f"(beta={beta},a0={a0})")
    out.append(_result("krall-generators", failures))

    failures = []
    for spec in (_spec_k1(0, 1), _spec_k1(Fraction(1, 2), Fraction(1, 3))):
        members = basis_up_to_degree(spec, 6)
        for i, f in enumerate(members):
            for h in members[: i + 1]:
                if f.degree + h.degree <= 6 and not is_member(f * h, spec)[0]:
                    failures.append(f"{_label(spec)}: product of degrees {f.degree},{h.degree}")
    out.append(_result("krall-product-closure", failures))

    failures = []
    spec2 = DarbouxSpec(2, Fraction(1, 2), 2, (Fraction(1), Fraction(1)))
    for spec in (_spec_k1(0, 1), spec2):
        bar_deg = tau(spec).tau_bar.degree
        for f in basis_up_to_degree(spec, 6):
            if f.degree == 0:
                continue
            cert = certificate_for(f, spec)
            if f.degree != cert.g.degree + bar_deg + 1:
                failures.append(f"{_label(spec)}: degree {f.degree} vs g degree {cert.g.degree}")
    out.append(_result("krall-degree-relation", failures))

    failures = []
    spec = _spec_k1(0, 1)
    f2 = quadratic_generator(0, 1)
    t = UniPoly.variable("t")
    for c in (Fraction(3), Fraction(-7, 2)):
        if not is_member(c * f2, spec)[0] or not is_member(f2 + c, spec)[0]:
            failures.append(f"scaling/shift by {c} breaks membership")
    if is_member(t, spec)[0] or is_member(f2 + t, spec)[0]:
        failures.append("degree-1 profile accepted")
    out.append(_result("krall-membership-invariance", failures))

    failures = []
    for spec in (_spec_k1(0, 1), spec2, _spec_k1(Fraction(1), Fraction(2))):
        for trial in range(4):
            g = _rand_unipoly(rng, "t", 2)
            if g.is_zero():
                g = UniPoly("t", (Fraction(1),))
            c = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
            el = element_from_g(g, c, spec)
            ok, _ = is_member(el.f, spec)
            if not ok:
                failures.append(f"{_label(spec)} trial={trial}: synthesized profile not a member")
                continue
            back = certificate_for(el.f, spec)
            if back.g != g or back.c != c:
                failures.append(f"{_label(spec)} trial={trial}: certificate round trip")
    out.append(_result("krall-certificates", failures))
    return out


def suite_multivariate(seed=0):
    rng = random.Random(seed)
    out = []

    failures = []
    for d in (2, 3, 4):
        for n in range(9):
            total = sum(sigma_dim(d, n - 2 * i) for i in range(n // 2 + 1))
            if total != comb(n + d - 1, d - 1):
                failures.append(f"d={d}, n={n}: {total}")
        for l in range(6):
            basis = harmonic_basis(d, l)
            if len(basis) != sigma_dim(d, l):
                failures.append(f"d={d}, l={l}: {len(basis)} elements")
            for y in basis:
                if not apply_geometric("laplacian", y).is_zero():
                    failures.append(f"d={d}, l={l}: non-harmonic element")
                if apply_geometric("euler", y) != Fraction(l) * y:
                    failures.append(f"d={d}, l={l}: non-homogeneous element")
            for i in range(len(basis)):
                for j in range(i):
                    if sphere_integral(basis[i] * basis[j], d) != 0:
                        failures.append(f"d={d}, l={l}: pair ({i},{j}) not orthogonal")
    out.append(_result("multivariate-harmonic-bases", failures))

    out.append(CheckResult("multivariate-eigen-equations", check_multivariate_eigenbasis(4, (2,)).passed,
                           "light run; the acceptance gate runs d in {2,3}, n <= 6"))

    failures = []
    for d in (2, 3):
        for l in range(5):
            for y in harmonic_basis(d, l):
                for m in range(3):
                    p = y * (MPoly.norm_sq(d) ** m)
                    if apply_geometric("sphere_laplacian", p) != Fraction(-l * (l + d - 2)) * p:
                        failures.append(f"d={d}, l={l}, m={m}")
    out.append(_result("multivariate-sphere-laplacian", failures))

    out.append(CheckResult("multivariate-orthogonality", check_sobolev_orthogonality(4).passed,
                           "light run; the acceptance gate runs total degree <= 5"))

    failures = []
    x1_3 = MPoly.variable(3, 0)
    if sphere_integral(MPoly.const(3, Fraction(1)), 3) != 1:
        failures.append("unit sphere average")
    if sphere_integral(MPoly.variable(2, 0) ** 2, 2) != Fraction(1, 2):
        failures.append("x1^2 average, d=2")
    if sphere_integral(x1_3 ** 4, 3) != Fraction(1, 5):
        failures.append("x1^4 average, d=3")
    if ball_integral(MPoly.const(2, Fraction(1)), 2) != Fraction(1, 2):
        failures.append("ball volume ratio, d=2")
    if ball_integral(MPoly.norm_sq(2), 2) != Fraction(1, 4):
        failures.append("|x|^2 ball average, d=2")
    if ball_integral(MPoly.const(2, Fraction(9)) - 12 * MPoly.norm_sq(2), 2) != Fraction(3, 2):
        failures.append("9-12|x|^2 ball average, d=2")
    out.append(_result("multivariate-integral-oracles", failures))

    failures = []
    for trial in range(8):
        beta_d = rng.choice(((Fraction(0), 2), (Fraction(1, 2), 3)))
        beta, d = beta_d
        op = _rand_ncop(rng, beta)
        p = _rand_unipoly(rng, "z", 3)
        if realize_pde(op, MPoly.from_radial(p, d), d) != MPoly.from_radial(realize(op, p), d):
            failures.append(f"trial={trial}, d={d}")
    out.append(_result("multivariate-radial-consistency", failures))
    return out


def suite_krall_example(spec, n_max=8, s_max=2):
    """The worked one-step family at the configured parameters."""
    if spec.alpha != 1 or spec.k != 1:
        raise ValueError("the worked-example suite needs alpha = k = 1")
    beta, a0 = spec.beta, spec.a[0]
    out = []
    qfam = QFamily(spec)

    fitted = fit_operator(quadratic_generator(beta, a0), spec, qfam)
    out.append(
        _result(
            "example-operator-table",
            [] if fitted == quartic_operator_table(beta, a0) else ["fitted table differs from closed form"],
        )
    )

    ref = [
        [UniPoly("t", (Fraction(1),)).coeff(i) for i in range(4)],
        [quadratic_generator(beta, a0).coeff(i) for i in range(4)],
        [cubic_generator(beta, a0).coeff(i) for i in range(4)],
    ]
    out.append(
        _result(
            "example-generators",
            [] if basis_up_to_degree(spec, 3) == echelon_basis(ref) else ["degree-3 basis mismatch"],
        )
    )

    failures = []
    rec = fit_recurrence(spec, max(n_max, 2))
    z = UniPoly.variable("z")
    for n in range(max(n_max, 2) + 1):
        rhs = rec.a[n] * qfam.q(n + 1) + rec.b[n] * qfam.q(n)
        if n:
            rhs = rhs + rec.c[n] * qfam.q(n - 1)
        if z * qfam.q(n) != rhs:
            failures.append(f"recurrence residual at n={n}")
    if (beta, a0) == (Fraction(0), Fraction(1)):
        if qfam.q(0) != UniPoly("z", (Fraction(-1),)):
            failures.append("q_0 != -1")
        if qfam.q(1) != UniPoly("z", (Fraction(9), Fraction(-12))):
            failures.append("q_1 != 9 - 12z")
        if qfam.shifted(0, 1) != UniPoly("z", (Fraction(-5, 4),)):
            failures.append("shifted q_{0,1} != -5/4")
        if rec.a[0] != Fraction(1, 12) or rec.b[0] != Fraction(3, 4):
            failures.append(f"first recurrence row ({rec.a[0]}, {rec.b[0]})")
    out.append(_result("example-transformed-family", failures))

    failures = []
    for s in range(s_max + 1):
        for m in range(n_max + 1):
            for n in range(m):
                if orthogonality_k1(spec, n, m, s) != 0:
                    failures.append(f"pairing(n={n},m={m},s={s})")
    for n in range(min(n_max, 5) + 1):
        if orthogonality_k1(spec, n, n) == 0:
            failures.append(f"vanishing norm at n={n}")
    out.append(_result("example-orthogonality", failures))

    failures = []
    if not is_member(quadratic_generator(beta, a0), spec)[0]:
        failures.append("degree-2 generator rejected")
    if not is_member(cubic_generator(beta, a0), spec)[0]:
        failures.append("degree-3 generator rejected")
    if is_member(UniPoly.variable("t"), spec)[0]:
        failures.append("degree-1 profile accepted")
    out.append(_result("example-membership", failures))
    return out


def _suite_acceptance(config):
    return acceptance_checks(config.seed)


def _suite_krall_example(config):
    spec = DarbouxSpec(config.alpha, as_fraction(config.beta), config.k, tuple(as_fraction(x) for x in config.a))
    return suite_krall_example(spec, n_max=min(config.n_max, 10), s_max=min(config.s_max, 4))


# verify subcommand registry: name -> callable(config) -> [CheckResult].
# config duck-types cli.RunConfig (alpha, beta, k, a, d, n_max, s_max,
# degree_max, seed); module suites only read the seed.
SUITES = {
    "exact-core": lambda config: suite_exact_core(config.seed),
    "jacobi": lambda config: suite_jacobi(config.seed),
    "operator-algebra": lambda config: suite_operator_algebra(config.seed),
    "darboux": lambda config: suite_darboux(config.seed),
    "krall-algebra": lambda config: suite_krall_algebra(config.seed),
    "multivariate": lambda config: suite_multivariate(config.seed),
    "krall-example": _suite_krall_example,
    "acceptance": _suite_acceptance,
}

MODULE_SUITES = ("exact-core", "jacobi", "operator-algebra", "darboux", "krall-algebra", "multivariate")


def run_suite(name, config):
    """Checks of one named suite, or of all module suites for 'all'."""
    if name == "all":
        out = []
        for key in MODULE_SUITES:
            out.extend(SUITES[key](config))
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {('all', *sorted(SUITES))}")
    return SUITES[name](config)
