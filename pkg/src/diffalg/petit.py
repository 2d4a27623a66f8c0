"""The nonassociative algebra S_f = (R_m, o) with g o h = gh mod_r f."""

from __future__ import annotations

from typing import NamedTuple, Optional

import random

from .errors import AlgebraMismatch, ZeroModulus
from .ore import OrePoly, mod_r, right_divmod
from . import linalg


class SfElement:
    """Polynomial of degree < m tied to its Petit algebra."""

    __slots__ = ("algebra", "poly")

    def __init__(self, algebra, poly):
        self.algebra = algebra
        self.poly = poly

    def _check(self, other):
        if not isinstance(other, SfElement) or other.algebra is not self.algebra:
            raise AlgebraMismatch("elements of different Petit algebras")

    def __add__(self, other):
        self._check(other)
        return SfElement(self.algebra, self.poly + other.poly)

    def __sub__(self, other):
        self._check(other)
        return SfElement(self.algebra, self.poly - other.poly)

    def __neg__(self):
        return SfElement(self.algebra, -self.poly)

    def __mul__(self, other):
        """The Petit product g o h = gh mod_r f."""
        self._check(other)
        return self.algebra.circ(self, other)

    def scale(self, a):
        return SfElement(self.algebra, self.poly.scale(a))

    def __bool__(self):
        return bool(self.poly)

    def __eq__(self, other):
        if not isinstance(other, SfElement):
            return NotImplemented
        return self.algebra is other.algebra and self.poly == other.poly

    def __hash__(self):
        return hash((id(self.algebra), self.poly))

    def __str__(self):
        return str(self.poly)

    def __repr__(self):
        return f"SfElement({self.poly})"


class ZeroDivisorPair(NamedTuple):
    left: SfElement
    right: SfElement


class PetitAlgebra:
    """S_f = K[t;delta]/K[t;delta]f with the mod_r product."""

    def __init__(self, f):
        if not f:
            raise ZeroModulus("modulus must be nonzero")
        if f.deg < 1:
            raise ZeroModulus("modulus must have degree >= 1")
        self.modulus = f.monic()
        self.tower = f.tower
        self.m = f.deg
        # deg 1 collapses to K; allowed, flagged for callers
        self.is_base_field = self.m == 1
        self.two_sided = is_two_sided(self.modulus)
        self.t_associative = (self.two_sided
                              or not mod_r(self.modulus * OrePoly.t(self.tower),
                                           self.modulus))

    # -- elements -------------------------------------------------------------

    def element(self, poly):
        """Wrap an Ore polynomial, reducing mod_r f when needed."""
        if poly.deg >= self.m:
            poly = mod_r(poly, self.modulus)
        return SfElement(self, poly)

    @property
    def one(self):
        return SfElement(self, OrePoly.one(self.tower))

    @property
    def zero(self):
        return SfElement(self, OrePoly.zero(self.tower))

    @property
    def t(self):
        return self.element(OrePoly.t(self.tower))

    def scalar(self, a):
        return SfElement(self, OrePoly.constant(self.tower, a))

    def circ(self, g, h):
        return SfElement(self, mod_r(g.poly * h.poly, self.modulus))

    def associator(self, a, b, c):
        """(a o b) o c - a o (b o c)."""
        for e in (a, b, c):
            if e.algebra is not self:
                raise AlgebraMismatch("associator arguments mismatch")
        return (self.circ(self.circ(a, b), c)
                - self.circ(a, self.circ(b, c)))

    # -- finite F-linear structure --------------------------------------------

    def f_dimension(self):
        """dim_F S_f = m * p^e (characteristic p, finite [K:F])."""
        fb = self.tower.f_basis()
        return self.m * fb.dim

    def f_basis_vectors(self):
        """F-basis {monomial * t^i} of S_f, i < m."""
        fb = self.tower.f_basis()
        out = []
        for i in range(self.m):
            for mono in fb.monomials:
                coeff = fb.monomial_element(mono)
                out.append(SfElement(
                    self, OrePoly.monomial(self.tower, coeff, i)))
        return out

    def f_coords(self, elem):
        fb = self.tower.f_basis()
        coords = []
        for i in range(self.m):
            coords.extend(fb.coords(elem.poly.coeff(i)))
        return coords

    def from_f_coords(self, coords):
        fb = self.tower.f_basis()
        n = fb.dim
        poly_coeffs = []
        for i in range(self.m):
            poly_coeffs.append(fb.from_coords(coords[i * n:(i + 1) * n]))
        return SfElement(self, OrePoly(self.tower, poly_coeffs))

    # -- K-linear structure ---------------------------------------------------

    def right_mul_matrix(self, h):
        """Matrix of R_h : g -> g o h over the left K-basis {t^i}."""
        cols = []
        for i in range(self.m):
            basis = SfElement(self, OrePoly.monomial(self.tower,
                                                     self.tower.one, i))
            prod = self.circ(basis, h)
            cols.append([prod.poly.coeff(j) for j in range(self.m)])
        return [[cols[j][i] for j in range(self.m)] for i in range(self.m)]

    def random_element(self, rng, max_deg=None):
        if max_deg is None:
            max_deg = self.m - 1
        coeffs = [self.tower.random_element(rng, max_deg=1, max_coeff=3)
                  for _ in range(max_deg + 1)]
        return SfElement(self, OrePoly(self.tower, coeffs))

    def __repr__(self):
        return f"PetitAlgebra({self.modulus})"


def make_petit(f):
    """Construct S_f (modulus monicized; S_{af} = S_f)."""
    return PetitAlgebra(f)


def is_two_sided(f):
    """f generates a two-sided ideal iff f*t and f*a lie in Rf for the
    ring generators a of K (closure under field operations makes the
    generator check sufficient)."""
    f = f.monic()
    tower = f.tower
    if mod_r(f * OrePoly.t(tower), f):
        return False
    for gen in tower.gens():
        if mod_r(f * OrePoly.constant(tower, gen), f):
            return False
    return True


def t_powers_associative(algebra):
    """Powers of t associate iff f*t lies in Rf; cross-checked against
    the literal comparison t^m o t = t o t^m."""
    f = algebra.modulus
    tower = algebra.tower
    criterion = not mod_r(f * OrePoly.t(tower), f)
    tm = algebra.element(OrePoly.monomial(tower, tower.one, algebra.m))
    direct = algebra.circ(tm, algebra.t) == algebra.circ(algebra.t, tm)
    if criterion != direct:
        from .errors import InternalInconsistency
        raise InternalInconsistency(
            "ft in Rf criterion disagrees with t^m o t = t o t^m")
    return criterion


def associator(a, b, c):
    return a.algebra.associator(a, b, c)


def zero_divisor_search(algebra, trials=20, seed=0) -> Optional[ZeroDivisorPair]:
    """Search for nonzero g, h with g o h = 0.

    Tries degree-1 right factors of f first (a reducible modulus always
    yields zero divisors through its factors), then kernels of right
    multiplication by random elements.  Returns None when inconclusive.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if algebra.m < 2:
        return None
    tower = algebra.tower
    f = algebra.modulus
    from .charp import right_root_search
    for r in right_root_search(f, bound=2 * algebra.m):
        lin = OrePoly(tower, (-r, tower.one))
        q, rem = right_divmod(f, lin)
        if not rem and q.deg < algebra.m:
            pair = ZeroDivisorPair(algebra.element(q), algebra.element(lin))
            if _verified(pair):
                return pair
    rng = random.Random(seed)
    zero = tower.zero
    one = tower.one
    for _ in range(trials):
        h = algebra.random_element(rng)
        if not h:
            continue
        matrix = algebra.right_mul_matrix(h)
        null = linalg.nullspace(matrix, zero, one)
        for vec in null:
            g = SfElement(algebra, OrePoly(tower, vec))
            pair = ZeroDivisorPair(g, h)
            if g and _verified(pair):
                return pair
    return None


def _verified(pair):
    return (bool(pair.left) and bool(pair.right)
            and not pair.left.algebra.circ(pair.left, pair.right))
