"""Pseudo-linear transformations, characteristic polynomials, tensor
resultants and similarity search."""

import random

import pytest

from diffalg import plt
from diffalg.errors import DegreeMismatch, NotMonic
from diffalg.ore import OrePoly, mod_r, right_gcd


def rand_monic(tower, rng, deg):
    coeffs = [tower.random_element(rng, max_deg=1, max_coeff=2)
              for _ in range(deg)] + [tower.one]
    return OrePoly(tower, coeffs)


def test_pseudo_linearity(qx):
    rng = random.Random(0)
    T = plt.from_polynomial(rand_monic(qx, rng, 3))
    for _ in range(25):
        alpha = qx.random_element(rng, max_deg=2, max_coeff=3)
        v = [qx.random_element(rng, max_deg=1, max_coeff=3)
             for _ in range(3)]
        lhs = T.apply([alpha * vi for vi in v])
        rhs = [alpha * wi + alpha.derive() * vi
               for wi, vi in zip(T.apply(v), v)]
        assert lhs == rhs


def test_from_polynomial_linear(qx):
    x = qx.gen("x")
    b = x ** 2 + 1
    T = plt.from_polynomial(OrePoly(qx, (-b, qx.one)))
    assert T.n == 1
    assert T.matrix[0][0] == b


def test_from_polynomial_needs_monic(qx):
    x = qx.gen("x")
    with pytest.raises(NotMonic):
        plt.from_polynomial(OrePoly(qx, (qx.one, x + x)))
    with pytest.raises(NotMonic):
        plt.from_polynomial(OrePoly.one(qx))


def test_charpoly_1x1(qx):
    x = qx.gen("x")
    b = x ** 2 + 1
    cert = plt.characteristic_polynomial(
        plt.from_polynomial(OrePoly(qx, (-b, qx.one))))
    assert cert.charpoly == OrePoly(qx, (-b, qx.one))


def test_charpoly_roundtrip(qx):
    rng = random.Random(3)
    for deg in (1, 2, 3, 4):
        f = rand_monic(qx, rng, deg)
        cert = plt.characteristic_polynomial(plt.from_polynomial(f))
        assert cert.charpoly == f


def test_charpoly_annihilates(qx):
    rng = random.Random(6)
    T = plt.from_polynomial(rand_monic(qx, rng, 3))
    cert = plt.characteristic_polynomial(T)
    iterates = [cert.vector]
    for _ in range(3):
        iterates.append(T.apply(iterates[-1]))
    acc = iterates[3]
    for i in range(3):
        hi = cert.charpoly.coeff(i)
        acc = [a + hi * w for a, w in zip(acc, iterates[i])]
    assert not any(acc)


def test_zero_plt_2x2(qx):
    x = qx.gen("x")
    Z = plt.zero_plt(qx, 2)
    assert Z.apply([x, qx.one]) == [qx.one, qx.zero]
    cert = plt.characteristic_polynomial(Z, vector=[x, qx.one])
    assert cert.charpoly == OrePoly(qx, (qx.zero, qx.zero, qx.one))


def test_resultant_linear(qx):
    x = qx.gen("x")
    rng = random.Random(1)
    for _ in range(10):
        a = qx.random_element(rng, max_deg=2, max_coeff=3)
        b = qx.random_element(rng, max_deg=2, max_coeff=3)
        r = plt.resultant(OrePoly(qx, (-a, qx.one)),
                          OrePoly(qx, (-b, qx.one)))
        assert r == OrePoly(qx, (-(a + b), qx.one))


def test_resultant_t_t(qx):
    assert plt.resultant(OrePoly.t(qx), OrePoly.t(qx)) == OrePoly.t(qx)


def test_resultant_degree(qx):
    rng = random.Random(2)
    for dm, dn in ((2, 2), (2, 3)):
        f = rand_monic(qx, rng, dm)
        g = rand_monic(qx, rng, dn)
        assert plt.resultant(f, g).deg == dm * dn


def test_similarity_self(qx):
    rng = random.Random(4)
    f = rand_monic(qx, rng, 2)
    w = plt.similarity_search(f, f, bound=2)
    assert isinstance(w, plt.SimilarityWitness)
    assert w.u_prime * f == f * w.u
    assert right_gcd(w.u, f).deg == 0


def test_similarity_log_derivative(qx):
    x = qx.gen("x")
    c = x ** 2 + 1
    f = OrePoly(qx, (-x, qx.one))
    g = OrePoly(qx, (-(x + c.derive() / c), qx.one))
    w = plt.similarity_search(f, g, bound=4)
    assert isinstance(w, plt.SimilarityWitness)
    assert w.u_prime * f == g * w.u


def test_similarity_not_found(qx):
    w = plt.similarity_search(OrePoly.t(qx),
                              OrePoly(qx, (-qx.one, qx.one)), bound=3)
    assert isinstance(w, plt.NotFoundWithinBound)


def test_similarity_degree_mismatch(qx):
    with pytest.raises(DegreeMismatch):
        plt.similarity_search(OrePoly.t(qx),
                              OrePoly(qx, (qx.zero, qx.zero, qx.one)))


def test_similarity_charp(f3x):
    x = f3x.gen("x")
    f = OrePoly(f3x, (-x, f3x.one))
    w = plt.similarity_search(f, f)
    assert isinstance(w, plt.SimilarityWitness)
    assert w.u_prime * f == f * w.u
