"""Exact linear algebra over the rationals: RREF, solving, kernels."""

from dataclasses import dataclass
from fractions import Fraction

from .rationals import as_fraction

__all__ = ["LinearProblem", "SolveResult", "solve_exact", "kernel_basis", "laplace_det"]


@dataclass
class LinearProblem:
    matrix: list  # rows of equal length
    rhs: list

    def __post_init__(self):
        self.matrix = [[as_fraction(x) for x in row] for row in self.matrix]
        self.rhs = [as_fraction(x) for x in self.rhs]
        if len(self.matrix) != len(self.rhs):
            raise ValueError("matrix/rhs row count mismatch")
        widths = {len(r) for r in self.matrix}
        if len(widths) > 1:
            raise ValueError("ragged matrix")


@dataclass
class SolveResult:
    status: str  # 'unique' | 'affine' | 'inconsistent'
    solution: list | None
    kernel: list
    certificate: tuple | None  # reduced row proving 0 == nonzero


def _rref(aug, ncols):
    """In-place RREF of augmented rows; returns pivot column list."""
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(aug)):
            if aug[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == len(aug):
            break
    return pivots


def solve_exact(problem):
    """Solve A x = b exactly; report uniqueness, kernel, or inconsistency."""
    rows = [list(r) + [b] for r, b in zip(problem.matrix, problem.rhs)]
    ncols = len(problem.matrix[0]) if problem.matrix else 0
    pivots = _rref(rows, ncols)
    for row in rows:
        if all(x == 0 for x in row[:ncols]) and row[ncols] != 0:
            return SolveResult("inconsistent", None, [], (tuple(row[:ncols]), row[ncols]))
    solution = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        solution[c] = rows[r][ncols]
    kernel = _kernel_from_rref(rows, pivots, ncols)
    status = "unique" if not kernel else "affine"
    return SolveResult(status, solution, kernel, None)


def _kernel_from_rref(rows, pivots, ncols):
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -rows[r][fc]
        basis.append(v)
    return basis


def kernel_basis(matrix):
    """Basis of the null space of a rational matrix (RREF back-substitution)."""
    rows = [[as_fraction(x) for x in r] for r in matrix]
    ncols = len(rows[0]) if rows else 0
    pivots = _rref(rows, ncols)
    return _kernel_from_rref(rows, pivots, ncols)


def laplace_det(rows):
    """Determinant by first-column expansion; entries from any commutative ring.

    Sized for the small Casorati matrices used here (k+1 <= 5 or so), where
    mixed scalar/polynomial entries rule out fraction-free elimination.
    """
    m = len(rows)
    if any(len(r) != m for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if m == 0:
        return Fraction(1)
    if m == 1:
        return rows[0][0]
    total = None
    for i in range(m):
        entry = rows[i][0]
        if isinstance(entry, Fraction) and entry == 0:
            continue
        minor = [r[1:] for j, r in enumerate(rows) if j != i]
        term = entry * laplace_det(minor)
        if i % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return Fraction(0)
    return total
