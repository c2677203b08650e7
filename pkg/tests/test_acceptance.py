"""Acceptance gate: the thirteen contracted end-to-end identities.

Every criterion runs at its full contracted size with exact rational
arithmetic and zero tolerance, and prints one pass/fail line.  Two
criteria quantify over the two-step transform at the weight parameter
where the seed determinant vanishes at index -1; the transformed family
degenerates there (q_0 is identically zero, so no three-term recurrence
with nonzero off-diagonal entries exists).  Those criteria fail honestly
with the failing index in the witness rather than silently shrinking
their quantification domain.
"""

from kralljacobi import checks


def _gate(result):
    status = "PASS" if result.passed else "FAIL"
    print(f"{result.name}: {status}" + (f"  [{result.witness}]" if result.witness else ""))
    assert result.passed, f"{result.name}: {result.witness}"


def test_01_operator_oracle():
    """Fitted fourth-order operator equals the frozen closed-form table at
    three (beta, a0) points."""
    _gate(checks.check_operator_oracle())


def test_02_algebra_generators():
    """Degree-3 basis spans exactly the closed-form quadratic and cubic
    generators after monic echelon normalization."""
    _gate(checks.check_algebra_generators())


def test_03_bispectral_pair():
    """Recurrence and differential eigen-equations hold for n <= 15 and all
    algebra members of degree <= 4, for the one-step family and both
    two-step weight parameters."""
    _gate(checks.check_bispectral_pair(n_max=15, degree_max=4))


def test_04_operator_commutativity():
    """All fitted operators commute pairwise; fitting is multiplicative on
    products within the degree window."""
    _gate(checks.check_operator_commutativity(degree_max=4))


def test_05_intertwining():
    """Truncated matrix intertwining on rows 0..N-k-1 at N=12."""
    _gate(checks.check_intertwining(N=12))


def test_06_orthogonality_point_mass():
    """The integral-plus-point-mass pairing vanishes off the diagonal for
    n < m <= 8 and in weighted form for s <= 4, n < m <= 6."""
    _gate(checks.check_orthogonality_point_mass(n_max=8, s_max=4, n_max_shifted=6))


def test_07_summation_operator():
    """The constructed summation operators reproduce brute-force telescoping
    sums for all monomial profiles of degree <= 4, n <= 10."""
    _gate(checks.check_summation_operator(degree_max=4, n_max=10))


def test_08_wronskian_summation():
    """Determinant summation identity on 200 seeded instances per size."""
    _gate(checks.check_wronskian_summation(seed=0, count=200, k_values=(1, 2, 3, 4)))


def test_09_tau_symmetry():
    """Involution (anti)symmetry and parity factorization of the seed
    determinant for k = 1..4 with random rational free coefficients."""
    _gate(checks.check_tau_symmetry(seed=0))


def test_10_weighted_eigen():
    """Fitted operators keep their eigen-equations on the weighted families
    for s <= 4, n <= 8."""
    _gate(checks.check_weighted_eigen(s_max=4, n_max=8, degree_max=4))


def test_11_multivariate_eigenbasis():
    """Radial-harmonic products diagonalize the lifted operators for
    d in {2, 3}, n <= 6, and the basis counts fill polynomial space."""
    _gate(checks.check_multivariate_eigenbasis(n_max=6, dims=(2, 3)))


def test_12_sobolev_orthogonality():
    """All distinct eigenbasis members of total degree <= 5 are orthogonal
    for the ball-plus-sphere inner product at three a0 values."""
    _gate(checks.check_sobolev_orthogonality(degree_max=5))


def test_13_classical_identities():
    """Eigen-equation, recurrence, and raising identities of the classical
    family over the four-point parameter grid, n <= 12."""
    _gate(checks.check_classical_identities(n_max=12, s_max=4))
