"""Lift the one-dimensional construction to the unit ball.

With beta = d/2 - 1 the one-variable substitution z -> |x|^2 turns the
transformed radial polynomials into genuine polynomials on R^d, and
multiplying by homogeneous harmonics fills out a basis Q_{n,i,j} of all
polynomials.  The operators realize as partial differential operators
through D1 -> (1/2) x.grad and D2 -> (1/4) Laplacian, and every Q_{n,i,j}
of total degree n is an eigenfunction with an eigenvalue depending on n
alone, massively degenerate across (i, j).  This script builds the basis
on the disk (d = 2) through degree 4 and watches that happen.
"""

from fractions import Fraction
from math import comb

from kralljacobi import (
    DarbouxSpec,
    QFamily,
    UniPoly,
    eigenvalue,
    fit_operator,
    q_multivariate,
    rat_str,
    realize_pde,
    sigma_dim,
)


def main():
    d = 2
    beta = Fraction(d, 2) - 1
    a0 = Fraction(1)
    spec = DarbouxSpec(1, beta, 1, (a0,))
    fam = QFamily(spec)

    lin = Fraction(3 + 4 * a0 + 4 * beta + 4 * a0 * beta, 2)
    f2 = UniPoly("t", (Fraction(0), lin, Fraction(1)))
    op = fit_operator(f2, spec, fam)

    print(f"dimension d = {d}, spec = {spec}")
    print("profile f_2 =", f2)
    print()

    print("eigenbasis members and their shared eigenvalues:")
    for n in range(5):
        ev = f2(eigenvalue(spec.ab, Fraction(n - 1, 2)))
        count = 0
        lines = []
        for i in range(n // 2 + 1):
            l = n - 2 * i
            for j in range(1, sigma_dim(d, l) + 1):
                Q = q_multivariate(n, i, j, spec, d)
                count += 1
                if realize_pde(op, Q, d) != Q * ev:
                    raise SystemExit(f"eigen equation fails at (n,i,j)=({n},{i},{j})")
                if count <= 3:
                    lines.append(f"    Q_({n},{i},{j}) = {Q}")
        expected = comb(n + d - 1, d - 1)
        print(f"  degree {n}: eigenvalue {rat_str(ev)}, multiplicity {count} (expected {expected})")
        for line in lines:
            print(line)
    print()

    print("all eigen equations verified exactly through degree 4")
    print("distinct total degrees get distinct eigenvalues:",
          len({f2(eigenvalue(spec.ab, Fraction(n - 1, 2))) for n in range(5)}) == 5)


if __name__ == "__main__":
    main()
