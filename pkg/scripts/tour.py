#!/usr/bin/env python3
"""Quick tour of the engine: twisted multiplication, eigenrings, the
characteristic-3 toolbox and a similarity witness.

    python3 scripts/tour.py
"""

from diffalg import charp, nucleus, petit, plt
from diffalg.fields import make_tower
from diffalg.ore import OrePoly, right_divmod


def banner(title):
    print()
    print(title)
    print("-" * len(title))


def main():
    qx = make_tower("Q", [("rational", "x")], delta={"x": "1"})
    x = qx.gen("x")

    banner("Twisted arithmetic over Q(x), delta = d/dx")
    t = OrePoly.t(qx)
    xc = OrePoly.constant(qx, x)
    print("t * x        =", t * xc)
    q, r = right_divmod(t * t, t - xc)
    print("t^2 = (", q, ")(t - x) +", r)

    banner("Eigenring of f = t^2 (dimension m^2 = 4, so f is special)")
    A = petit.make_petit(t * t)
    sub = nucleus.right_nucleus(A, nucleus.AnsatzConfig(numerator_bound=2))
    print("dim Nuc_r =", sub.dim)
    for b in sub.basis:
        print("   ", b)
    print("verdict:", nucleus.a_polynomial_test(
        A, nucleus.AnsatzConfig(numerator_bound=2)).verdict)

    f3x = make_tower(3, [("rational", "x")], delta={"x": "1"})
    x3 = f3x.gen("x")

    banner("Characteristic 3: F_3(x) with delta = d/dx")
    print("V_3(x) =", charp.v_p(f3x, x3))
    C = charp.center_of_R(f3x)
    print("center of R generated by z =", C.z,
          "over", C.constant_field, "(certified)" if C.certified else "")
    print("bound of t - x:", charp.bound_of(OrePoly(f3x, (-x3, f3x.one))))

    banner("Splitting t^3 - x^3 and a nonassociative quotient")
    P = charp.min_p_polynomial(f3x).with_d0(x3 ** 3)
    w = charp.split_solver(f3x, P)
    print("witness b =", w.b, " so (t -", str(w.b) + ") divides f on the right")
    B = petit.make_petit(OrePoly(f3x, (-x3, f3x.zero, f3x.one)))
    nuc, center = nucleus.nucleus_and_center(B)
    print("S_f for f = t^2 - x: dim_F =", B.f_dimension(),
          " Nuc dim =", nuc.dim, " center dim =", center.dim)

    banner("Similarity of t - x and its logarithmic-derivative twist")
    c = x ** 2 + 1
    f = OrePoly(qx, (-x, qx.one))
    g = OrePoly(qx, (-(x + c.derive() / c), qx.one))
    w = plt.similarity_search(f, g, bound=4)
    print("u =", w.u, " with u' f = g u, u' =", w.u_prime)


if __name__ == "__main__":
    main()
