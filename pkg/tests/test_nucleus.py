"""Nuclei of S_f: the eigenring, left/middle nuclei, Nuc and Center,
structure-constant presentations and A-polynomial detection."""

import pytest

from diffalg import nucleus, petit
from diffalg.errors import AnsatzRequired, InfiniteDimension
from diffalg.ore import OrePoly, mod_r


def algebra(tower, coeffs):
    return petit.make_petit(OrePoly(tower, coeffs))


def test_eigenring_t2_qx(qx):
    """Hand-derived: g = g0 + g1 t is in Nuc_r(t^2) iff g0'' = 0 and
    2 g0' + g1'' = 0, giving the basis {1, t, x t, x^2 t - x}."""
    x = qx.gen("x")
    A = algebra(qx, (qx.zero, qx.zero, qx.one))
    sub = nucleus.right_nucleus(A, nucleus.AnsatzConfig(numerator_bound=2))
    assert sub.dim == 4
    assert sub.certified_max
    expected = [
        OrePoly.one(qx),
        OrePoly.t(qx),
        OrePoly(qx, (qx.zero, x)),
        OrePoly(qx, (-x, x ** 2)),
    ]
    for e in expected:
        assert nucleus.membership(A, sub, A.element(e))


def test_eigenring_requires_ansatz_char0(qx):
    A = algebra(qx, (qx.zero, qx.zero, qx.one))
    with pytest.raises(AnsatzRequired):
        nucleus.right_nucleus(A)


def test_eigenring_defining_condition(f3x):
    x = f3x.gen("x")
    A = algebra(f3x, (-x, f3x.zero, f3x.one))
    sub = nucleus.right_nucleus(A)
    assert sub.dim == 2
    for g in sub.basis:
        assert not mod_r(A.modulus * g.poly, A.modulus)


def test_eigenring_two_sided_is_everything(f3x):
    x = f3x.gen("x")
    A = algebra(f3x, (-(x ** 3), f3x.zero, f3x.zero, f3x.one))
    sub = nucleus.right_nucleus(A)
    assert sub.dim == A.f_dimension() == 9


def test_left_middle_nuclei_equal_K(f3x):
    x = f3x.gen("x")
    A = algebra(f3x, (-x, f3x.zero, f3x.one))
    nl = nucleus.left_nucleus(A)
    nm = nucleus.middle_nucleus(A)
    assert nl.dim == nm.dim == 3
    assert nl.label == "K" and nm.label == "K"
    # every basis element has degree 0 in t
    for b in nl.basis + nm.basis:
        assert b.poly.deg <= 0


def test_left_nucleus_char0_structural(qx):
    A = algebra(qx, (qx.zero, qx.zero, qx.one))
    nl = nucleus.left_nucleus(A)
    assert nl.label == "K"


def test_nucleus_and_center(f3x):
    x = f3x.gen("x")
    A = algebra(f3x, (-x, f3x.zero, f3x.one))
    nuc, center = nucleus.nucleus_and_center(A)
    # Nuc = Nuc_r cap K is a proper intermediate field here
    assert nuc.dim == 1
    assert center.dim == 1
    assert 0 < nuc.dim < 3


def test_nucleus_and_center_needs_finite(qx):
    A = algebra(qx, (qx.zero, qx.zero, qx.one))
    with pytest.raises(InfiniteDimension):
        nucleus.nucleus_and_center(A)


def test_presentation_eigenring(f3x):
    x = f3x.gen("x")
    A = algebra(f3x, (-x, f3x.zero, f3x.one))
    sub = nucleus.right_nucleus(A)
    pres = nucleus.presentation(sub)
    assert pres.unit_coords is not None
    n = sub.dim
    assert len(pres.structure_constants) == n
    for row in pres.structure_constants:
        assert len(row) == n
        for sol in row:
            for c in sol:
                assert c.is_constant()


def test_apoly_t2(qx):
    A = algebra(qx, (qx.zero, qx.zero, qx.one))
    v = nucleus.a_polynomial_test(A, nucleus.AnsatzConfig(numerator_bound=2))
    assert v.verdict == "APolynomial"
    assert v.dim == 4
    assert v.certified_max


def test_apoly_degenerate_degree_one(qx):
    A = algebra(qx, (qx.gen("x"), qx.one))
    v = nucleus.a_polynomial_test(A, nucleus.AnsatzConfig(numerator_bound=1))
    assert v.verdict == "APolynomial"
    assert v.dim == 1


def test_apoly_char_p_inconclusive(f3x):
    x = f3x.gen("x")
    A = algebra(f3x, (-x, f3x.zero, f3x.one))
    v = nucleus.a_polynomial_test(A)
    assert v.verdict == "Inconclusive"
    assert v.dim == 2


def test_default_ansatz_reaches_t2(qx):
    A = algebra(qx, (qx.zero, qx.zero, qx.one))
    sub = nucleus.right_nucleus(A, nucleus.default_ansatz(A))
    assert sub.dim == 4
