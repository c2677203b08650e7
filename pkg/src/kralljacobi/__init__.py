"""Exact Krall-Jacobi machinery: Darboux transforms of Jacobi polynomials,
the commutative algebra of their eigenvalue profiles, the differential
operators realizing those profiles, and the rotation-invariant lift to the
unit ball.  Everything is rational arithmetic; nothing is ever rounded."""

from .checks import CheckResult, acceptance_checks, run_suite
from .darboux import (
    DarbouxSpec,
    DegeneracyError,
    QFamily,
    TridiagOp,
    fit_recurrence,
    intertwine_check,
    intertwine_matrices,
    orthogonality_k1,
    psi,
    q_poly,
    q_shifted,
    tau,
)
from .discrete import casorati, discrete_integral, wronskian_sum_identity
from .jacobi import JacobiParams, beta_moment, eigenvalue, eigenvalue_poly, jacobi_poly, recurrence_coeffs
from .krall import (
    AlgebraElement,
    basis_up_to_degree,
    certificate_for,
    echelon_basis,
    element_from_g,
    is_member,
)
from .linalg import LinearProblem, SolveResult, kernel_basis, solve_exact
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
from .ncalg import (
    FitError,
    NCOp,
    commutator,
    fit_operator,
    jacobi_operator,
    jacobi_sum_operator,
    nc_mul,
    realize,
)
from .rationals import as_fraction, parse_rat, rat_str
from .unipoly import (
    UniPoly,
    discrete_antidifference,
    express_in_quadratic,
    polydivrem,
    substitute_affine,
)

__version__ = "0.1.0"
