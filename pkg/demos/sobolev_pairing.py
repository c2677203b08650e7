"""The inner product that makes the lifted family orthogonal.

On the ball, the transformed family is not orthogonal for any plain
weight: the one-dimensional point mass at z = 1 becomes a uniform mass
on the boundary sphere, and matching the transform also costs a first
order correction built from the spherical Laplacian.  The pairing is

    <f, g> = ball(f g) + (u0/2) sphere(f g) - (u0/4) ball((Lap_S f) g)

with u0 = 2 / (a0 d), all means normalized by the sphere measure.  This
script computes the Gram matrix of the eigenbasis through degree 3 under
that pairing, confirms it is diagonal with nonzero diagonal, and shows
that dropping the boundary terms destroys orthogonality.
"""

from fractions import Fraction

from kralljacobi import (
    DarbouxSpec,
    ball_integral,
    inner_product_kd,
    q_multivariate,
    rat_str,
    sigma_dim,
)


def basis_through(degree, spec, d):
    out = []
    for n in range(degree + 1):
        for i in range(n // 2 + 1):
            for j in range(1, sigma_dim(d, n - 2 * i) + 1):
                out.append(((n, i, j), q_multivariate(n, i, j, spec, d)))
    return out


def main():
    d = 2
    a0 = Fraction(1)
    spec = DarbouxSpec(1, Fraction(d, 2) - 1, 1, (a0,))
    fam = basis_through(3, spec, d)

    print(f"d = {d}, a0 = {rat_str(a0)}, {len(fam)} basis members through degree 3")
    print()

    print("Gram matrix under the mixed pairing (rows/cols in basis order):")
    off_diag_bad = 0
    for (lx, fx) in fam:
        row = []
        for (ly, fy) in fam:
            v = inner_product_kd(fx, fy, d, a0)
            if lx != ly and v != 0:
                off_diag_bad += 1
            row.append(rat_str(v) if v != 0 else ".")
        print("  " + "  ".join(f"{s:>8}" for s in row))
    print()
    print("off-diagonal nonzeros:", off_diag_bad)
    print("diagonal norms:", [rat_str(inner_product_kd(f, f, d, a0)) for _, f in fam[:5]], "...")
    print()

    # without the boundary terms the radial members of equal parity collide
    (la, fa), (lb, fb) = fam[0], fam[5]
    plain = ball_integral(fa * fb, d)
    mixed = inner_product_kd(fa, fb, d, a0)
    print(f"pair Q{la} vs Q{lb}:")
    print(f"  plain ball integral of the product: {rat_str(plain)}")
    print(f"  mixed pairing:                      {rat_str(mixed)}")
    print("the sphere mass and the Lap_S correction are what cancel the bulk term")


if __name__ == "__main__":
    main()
