"""Acceptance suite: eleven exact criteria, one pass/fail line each.

Every check is exact (zero tolerance); the printed lines go straight to
the real stdout so they survive pytest's capturing.
"""

import os
import random
import sys

from diffalg import charp, nucleus, petit, plt
from diffalg.ore import OrePoly, linear_power, mod_r, right_divmod


def report(capfd, num, desc, ok):
    line = f"{'PASS' if ok else 'FAIL'} criterion {num}: {desc}"
    with capfd.disabled():
        print(line)
        sys.stdout.flush()
    assert ok, line


def rand_poly(tower, rng, max_deg=3):
    coeffs = [tower.random_element(rng, max_deg=1, max_coeff=3)
              for _ in range(rng.randint(1, max_deg + 1))]
    return OrePoly(tower, coeffs)


def test_criterion_1_ore_arithmetic(qx, capfd):
    rng = random.Random(100)
    ok = True
    for _ in range(50):
        a, b, c = (rand_poly(qx, rng) for _ in range(3))
        ok = ok and (a * b) * c == a * (b * c)
        ok = ok and a * (b + c) == a * b + a * c
        if a and b:
            ok = ok and (a * b).deg == a.deg + b.deg
        if b:
            q, r = right_divmod(a, b)
            ok = ok and q * b + r == a and r.deg < b.deg
    report(capfd, 1, "200 exact checks: associativity, distributivity, "
              "degree additivity, divmod re-expansion", ok)


def test_criterion_2_worked_division(qx, capfd):
    x = qx.gen("x")
    t2 = OrePoly(qx, (qx.zero, qx.zero, qx.one))
    q, r = right_divmod(t2, OrePoly(qx, (-x, qx.one)))
    ok = (q == OrePoly(qx, (x, qx.one))
          and r == OrePoly.constant(qx, x ** 2 + 1))
    report(capfd, 2, "right_divmod(t^2, t-x) = (t+x, x^2+1) over Q(x)", ok)


def test_criterion_3_frobenius(f3x, f5x, capfd):
    ok = True
    for tower, count in ((f3x, 60), (f5x, 40)):
        p = tower.char
        rng = random.Random(p)
        tp = OrePoly.monomial(tower, tower.one, p)
        for _ in range(count):
            b = tower.random_element(rng, max_deg=2, max_coeff=2,
                                     denominator=True)
            expect = tp - OrePoly.constant(tower, charp.v_p(tower, b))
            ok = ok and linear_power(tower, b, p) == expect
    report(capfd, 3, "(t-b)^p = t^p - V_p(b) for 100 random b over F_3(x) "
              "and F_5(x)", ok)


def test_criterion_4_eigenring(qx, capfd):
    x = qx.gen("x")
    A = petit.make_petit(OrePoly(qx, (qx.zero, qx.zero, qx.one)))
    sub = nucleus.right_nucleus(A, nucleus.AnsatzConfig(numerator_bound=2))
    expected = [
        OrePoly.one(qx),
        OrePoly.t(qx),
        OrePoly(qx, (qx.zero, x)),
        OrePoly(qx, (-x, x ** 2)),
    ]
    ok = sub.dim == 4
    for e in expected:
        ok = ok and nucleus.membership(A, sub, A.element(e))
    verdict = nucleus.a_polynomial_test(
        A, nucleus.AnsatzConfig(numerator_bound=2))
    ok = ok and verdict.verdict == "APolynomial"
    report(capfd, 4, "Nuc_r(t^2) over Q(x) has dim 4 with basis "
              "{1, t, x t, x - x^2 t}; verdict APolynomial", ok)


def test_criterion_5_structure(f3x, capfd):
    x = f3x.gen("x")
    A = petit.make_petit(OrePoly(f3x, (-x, f3x.zero, f3x.one)))
    ok = not A.two_sided
    ok = ok and A.f_dimension() == 6
    nl = nucleus.left_nucleus(A)
    nm = nucleus.middle_nucleus(A)
    ok = ok and nl.dim == 3 and nm.dim == 3
    ok = ok and nl.label == "K" and nm.label == "K"
    nuc, _ = nucleus.nucleus_and_center(A)
    ok = ok and 0 < nuc.dim < 3
    for b in nuc.basis:
        ok = ok and b.poly.deg <= 0
    report(capfd, 5, "f = t^2-x over F_3(x): Nuc_l = Nuc_m = K (dim 3), "
              "dim S_f = 6, Nuc a proper intermediate field", ok)


def test_criterion_6_two_sidedness(qx, f3x, capfd):
    x3 = f3x.gen("x")
    f = OrePoly(f3x, (-(x3 ** 3), f3x.zero, f3x.zero, f3x.one))
    ok = petit.is_two_sided(f)
    A = petit.make_petit(f)
    rng = random.Random(6)
    for _ in range(200):
        a, b, c = (A.random_element(rng) for _ in range(3))
        ok = ok and not A.associator(a, b, c)
    xq = qx.gen("x")
    t2 = OrePoly(qx, (qx.zero, qx.zero, qx.one))
    ok = ok and not petit.is_two_sided(t2)
    B = petit.make_petit(t2)
    assoc = B.associator(B.t, B.t, B.scalar(xq))
    ok = ok and assoc == B.element(OrePoly(qx, (qx.zero, qx.from_int(-2))))
    report(capfd, 6, "is_two_sided(t^3-x^3) with 200 vanishing associators; "
              "t^2 one-sided with [t,t,x] = -2t", ok)


def test_criterion_7_charp_invariants(f3x, capfd):
    x = f3x.gen("x")
    P = charp.min_p_polynomial(f3x)
    ok = P.e == 1 and not P.cs[0]
    C = charp.center_of_R(f3x)
    ok = ok and C.z == OrePoly.monomial(f3x, f3x.one, 3) and C.certified
    fstar = charp.bound_of(OrePoly(f3x, (-x, f3x.one)))
    ok = ok and fstar == OrePoly(f3x, (-(x ** 3), f3x.zero, f3x.zero,
                                       f3x.one))
    report(capfd, 7, "min p-polynomial t^3, central z = t^3 certified, "
              "bound_of(t-x) = t^3 - x^3", ok)


def test_criterion_8_split(f3x, capfd):
    x = f3x.gen("x")
    P = charp.min_p_polynomial(f3x).with_d0(x ** 3)
    w = charp.split_solver(f3x, P)
    ok = isinstance(w, charp.SplitWitness) and w.b == x
    ok = ok and not mod_r(P.f_ore(), w.factor)
    P2 = charp.min_p_polynomial(f3x).with_d0(x ** -3)
    r = charp.split_solver(f3x, P2, bound=10)
    ok = ok and isinstance(r, charp.NoSolutionWithinBound)
    rep = charp.split_report(f3x, P2, bound=10)
    ok = ok and rep["label"] == "division (uncertified at bound 10)"
    report(capfd, 8, "split witness b = x for d0 = x^3; d0 = x^-3 labelled "
              "division (uncertified at bound 10)", ok)


def test_criterion_9_resultants(qx, capfd):
    rng = random.Random(9)
    ok = True
    for _ in range(50):
        a = qx.random_element(rng, max_deg=2, max_coeff=3)
        b = qx.random_element(rng, max_deg=2, max_coeff=3)
        r = plt.resultant(OrePoly(qx, (-a, qx.one)),
                          OrePoly(qx, (-b, qx.one)))
        ok = ok and r == OrePoly(qx, (-(a + b), qx.one))
    for deg in (1, 2, 3, 4):
        coeffs = [qx.random_element(rng, max_deg=1, max_coeff=2)
                  for _ in range(deg)] + [qx.one]
        f = OrePoly(qx, coeffs)
        cert = plt.characteristic_polynomial(plt.from_polynomial(f))
        ok = ok and cert.charpoly == f
    h = plt.characteristic_polynomial(plt.zero_plt(qx, 2)).charpoly
    A = petit.make_petit(h)
    sub = nucleus.right_nucleus(A, nucleus.AnsatzConfig(numerator_bound=2))
    ok = ok and sub.dim == 4
    report(capfd, 9, "resultant(t-a, t-b) = t-(a+b) x50; charpoly round-trip; "
              "eigenring of the split class has dim 4", ok)


def test_criterion_10_scenarios(capfd):
    rep = charp.scenario_builder(3, 1, 2)
    ok = rep["dim_S_f"] == 6 and rep["regime"] == "nonassociative"
    rep2 = charp.scenario_builder(3, 1, 3)
    ok = ok and rep2["regime"] == "two_sided_extension" and rep2["two_sided"]
    for p in (2, 3, 5):
        for n in range(1, 5):
            ok = ok and charp.cyclic_dimension_bookkeeping(
                p, n)["n_plus_1_le_pn"]
    report(capfd, 10, "scenario (3,1,2) dim 6 nonassociative; (3,1,3) forces "
               "the two-sided extension; n+1 <= p^n bookkeeping", ok)


def test_criterion_11_cli_golden(capfd):
    import io
    from contextlib import redirect_stdout

    from diffalg import cli
    from test_cli import CASES, GOLDEN

    ok = True
    saw_exit_2 = False
    for golden, argv, expected_code in CASES:
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = cli.main(argv)
        with open(os.path.join(GOLDEN, golden), encoding="utf-8") as fh:
            ok = ok and buf.getvalue() == fh.read()
        ok = ok and code == expected_code
        saw_exit_2 = saw_exit_2 or expected_code == 2
    ok = ok and saw_exit_2
    report(capfd, 11, "byte-identical golden JSON for every CLI command; "
               "exit code 2 on bounded inconclusiveness", ok)
