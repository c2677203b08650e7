"""Explore the commutative algebra of eigenvalue profiles.

Not every polynomial f gives rise to a differential operator diagonal on
a transformed family; the ones that do form a subalgebra of Q[t].  A
member is recognized by a divisibility condition on its finite
differences, and each member carries a certificate (g, c): the
difference-quotient profile g and the base value c.  This script tests
a few polynomials for membership, prints certificates, rebuilds members
from their certificates, and shows the basis of the algebra through
degree 6 together with the product-closure property.
"""

from fractions import Fraction

from kralljacobi import (
    DarbouxSpec,
    UniPoly,
    basis_up_to_degree,
    certificate_for,
    element_from_g,
    is_member,
    rat_str,
)


def show_membership(f, spec):
    ok, _ = is_member(f, spec)
    verdict = "member" if ok else "NOT a member"
    print(f"  {f}  ->  {verdict}")
    return ok


def main():
    spec = DarbouxSpec(1, Fraction(0), 1, (Fraction(1),))
    t = UniPoly("t", (Fraction(0), Fraction(1)))

    print("spec:", spec)
    print()

    f2 = t ** 2 + Fraction(7, 2) * t
    f3 = t ** 3 + Fraction(7, 4) * t ** 2 - Fraction(33, 16) * t
    print("membership tests:")
    show_membership(UniPoly("t", (Fraction(1),)), spec)
    show_membership(t, spec)
    show_membership(f2, spec)
    show_membership(f3, spec)
    show_membership(t ** 2, spec)
    print()

    print("certificate of f_2:")
    cert = certificate_for(f2, spec)
    print("  f =", cert.f)
    print("  g =", cert.g)
    print("  c =", rat_str(cert.c))
    rebuilt = element_from_g(cert.g, cert.c, spec)
    print("  rebuilt from (g, c):", rebuilt.f, "  match:", rebuilt.f == f2)
    print()

    print("echelonized basis through degree 6:")
    for member in basis_up_to_degree(spec, 6):
        print("  ", member)
    print()

    # closure: the product of two members is again a member
    prod = f2 * f3
    ok, _ = is_member(prod, spec)
    print(f"f_2 * f_3 has degree {prod.degree} and is a member: {ok}")

    # the gap: t itself is excluded, so the algebra has no degree-1 member
    print("degrees present through 6:", [m.degree for m in basis_up_to_degree(spec, 6)])


if __name__ == "__main__":
    main()
