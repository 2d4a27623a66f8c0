"""Nuclei of S_f: Nuc_l, Nuc_m, Nuc_r (the eigenring), Nuc and Center,
plus A-polynomial detection through the eigenring dimension."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import NamedTuple, Optional

from . import linalg
from .errors import (
    AnsatzRequired,
    InconsistentAnsatz,
    InfiniteDimension,
    InternalInconsistency,
    NotClosed,
)
from .ore import OrePoly, mod_r
from .petit import PetitAlgebra, SfElement


@dataclass
class FSubspace:
    """F-subspace of S_f given by a basis of reduced elements.

    label marks structural answers ("K", "S_f") where a finite basis
    over F does not exist (characteristic-0 towers).
    """

    ambient: PetitAlgebra
    basis: list
    label: Optional[str] = None
    certified_max: bool = False
    lower_bound_only: bool = False

    @property
    def dim(self):
        return len(self.basis)


@dataclass
class AnsatzConfig:
    """Bounded search space for characteristic-0 eigenring solves:
    numerators of total degree <= numerator_bound over a fixed
    denominator."""

    numerator_bound: int
    denominator: object = None  # tower Element; defaults to 1

    def resolved_denominator(self, tower):
        den = self.denominator if self.denominator is not None else tower.one
        if not den:
            raise InconsistentAnsatz("ansatz denominator is zero")
        return den


@dataclass
class FAlgebraPresentation:
    subspace: FSubspace
    structure_constants: list       # c[i][j][k], F-scalars
    unit_coords: Optional[list]


class APolyVerdict(NamedTuple):
    verdict: str                    # APolynomial | NotAPolynomial | Inconclusive
    dim: int
    certified_max: bool
    note: str = ""


def default_ansatz(algebra):
    """Denominator = product of coefficient denominators of f, to the
    power m; numerator degree bound 2m."""
    tower = algebra.tower
    ring = tower._ring
    den_poly = ring.one
    for c in algebra.modulus.coeffs:
        for frac in c.terms.values():
            g = den_poly.gcd(frac.denom)
            den_poly = den_poly.quo(g) * frac.denom
    den = _element_from_poly(tower, den_poly) ** algebra.m
    return AnsatzConfig(numerator_bound=2 * algebra.m, denominator=den)


def _element_from_poly(tower, poly):
    from .fields import Element
    return Element(tower, {tower._zero_beta: tower._field.new(poly)})


# --------------------------------------------------------------------------
# base-field coordinate extraction (shared by the ansatz solves)
# --------------------------------------------------------------------------

def base_coordinate_rows(tower, elements):
    """Clear a common denominator and list each element's coordinates
    over the base field, keyed by (inseparable exps, rational exps).

    Returns (rows, keys): rows[i] maps key -> base scalar as a constant
    tower element; keys is the sorted union.
    """
    ring = tower._ring
    D = ring.one
    for a in elements:
        for frac in a.terms.values():
            g = D.gcd(frac.denom)
            D = D.quo(g) * frac.denom
    rows = []
    keys = set()
    for a in elements:
        row = {}
        for beta, frac in a.terms.items():
            poly = frac.numer * D.quo(frac.denom)
            for k, coeff in poly.terms():
                key = (beta, k)
                scalar = _base_scalar(tower, coeff)
                row[key] = row.get(key, tower.zero) + scalar
                keys.add(key)
        rows.append(row)
    return rows, sorted(keys)


def _base_scalar(tower, coeff):
    if tower.char:
        return tower.from_int(int(coeff) % tower.char)
    return tower.from_rational(
        Fraction(int(coeff.numerator), int(coeff.denominator)))


def sf_coordinate_rows(algebra, elements):
    """base_coordinate_rows across the m Ore coefficients of each
    S_f element; keys become (position, element key)."""
    tower = algebra.tower
    flat = []
    for e in elements:
        for i in range(algebra.m):
            flat.append(e.poly.coeff(i))
    rows, keys = base_coordinate_rows(tower, flat)
    out = []
    for idx in range(len(elements)):
        merged = {}
        for i in range(algebra.m):
            for key, val in rows[idx * algebra.m + i].items():
                merged[(i, key)] = val
        out.append(merged)
    full_keys = sorted({k for row in out for k in row})
    return out, full_keys


def _rows_to_matrix_columns(rows, keys, zero):
    """Column per row-dict, matrix rows indexed by keys."""
    return [[row.get(k, zero) for row in rows] for k in keys]


def _f_coord_vectors(algebra, elements):
    """Coordinate vectors of S_f elements over F, suitable for F-linear
    span arguments.

    Characteristic p: F-coordinates over the monomial basis (entries are
    elements of F inside K).  Characteristic 0 (F = Q): rational
    coordinates after clearing a common denominator.
    """
    tower = algebra.tower
    if tower.finite_over_constants:
        return [algebra.f_coords(e) for e in elements]
    rows, keys = sf_coordinate_rows(algebra, elements)
    return [[row.get(k, tower.zero) for k in keys] for row in rows]


# --------------------------------------------------------------------------
# right nucleus / eigenring
# --------------------------------------------------------------------------

def right_nucleus(algebra, cfg=None):
    """Nuc_r(S_f) = {g : deg g < m, fg in Rf}.

    Finite [K:F]: exact F-linear nullspace.  Characteristic 0: solution
    space within the ansatz, certified maximal only when dim = m^2.
    """
    tower = algebra.tower
    if tower.finite_over_constants:
        return _right_nucleus_finite(algebra)
    if cfg is None:
        raise AnsatzRequired(
            "characteristic-0 towers need an AnsatzConfig")
    return _right_nucleus_ansatz(algebra, cfg)


def _residual(algebra, g_poly):
    return mod_r(algebra.modulus * g_poly, algebra.modulus)


def _right_nucleus_finite(algebra):
    tower = algebra.tower
    basis_vecs = algebra.f_basis_vectors()
    cols = []
    for b in basis_vecs:
        res = _residual(algebra, b.poly)
        cols.append(algebra.f_coords(SfElement(algebra, res)))
    matrix = [[cols[j][i] for j in range(len(basis_vecs))]
              for i in range(len(cols[0]))]
    null = linalg.nullspace(matrix, tower.zero, tower.one)
    basis = [algebra.from_f_coords(v) for v in null]
    sub = FSubspace(algebra, basis)
    _verify_right_nucleus(algebra, sub)
    return sub


def _monomial_elements(tower, bound):
    """All monomials in the rational generators of total degree <= bound."""
    names = tower.rat_names
    out = []
    for total in range(bound + 1):
        for exps in itertools.product(range(total + 1), repeat=len(names)):
            if sum(exps) != total:
                continue
            elem = tower.one
            for name, e in zip(names, exps):
                if e:
                    elem = elem * tower.gen(name) ** e
            out.append(elem)
    return out

def _right_nucleus_ansatz(algebra, cfg):
    tower = algebra.tower
    den = cfg.resolved_denominator(tower)
    monos = _monomial_elements(tower, cfg.numerator_bound)
    unknowns = []
    residuals = []
    for i in range(algebra.m):
        for mono in monos:
            g = OrePoly.monomial(tower, mono / den, i)
            unknowns.append(g)
            residuals.append(SfElement(algebra, _residual(algebra, g)))
    rows, keys = sf_coordinate_rows(algebra, residuals)
    matrix = _rows_to_matrix_columns(rows, keys, tower.zero)
    null = linalg.nullspace(matrix, tower.zero, tower.one)
    basis = []
    for v in null:
        acc = OrePoly.zero(tower)
        for c, g in zip(v, unknowns):
            if c:
                acc = acc + g.scale(c)
        basis.append(SfElement(algebra, acc))
    maximal = len(basis) == algebra.m ** 2
    sub = FSubspace(algebra, basis, certified_max=maximal,
                    lower_bound_only=not maximal)
    _verify_right_nucleus(algebra, sub)
    return sub


def _verify_right_nucleus(algebra, sub):
    """Defining condition holds exactly and the space is closed under o."""
    for g in sub.basis:
        if _residual(algebra, g.poly):
            raise InternalInconsistency("right nucleus basis fails fg in Rf")
    if not _closed_under_product(algebra, sub.basis):
        raise InternalInconsistency("right nucleus is not closed under o")


def _closed_under_product(algebra, basis):
    if not basis:
        return True
    products = [algebra.circ(a, b) for a in basis for b in basis]
    vecs = _f_coord_vectors(algebra, list(basis) + products)
    zero = algebra.tower.zero
    one = algebra.tower.one
    basis_vecs = vecs[:len(basis)]
    return all(linalg.in_span(basis_vecs, v, zero, one)
               for v in vecs[len(basis):])


def membership(algebra, sub, elem):
    """Exact F-linear membership of an S_f element in span(sub.basis)."""
    vecs = _f_coord_vectors(algebra, list(sub.basis) + [elem])
    zero = algebra.tower.zero
    one = algebra.tower.one
    return linalg.in_span(vecs[:-1], vecs[-1], zero, one)


# --------------------------------------------------------------------------
# left / middle nucleus
# --------------------------------------------------------------------------

def _associator_solve(algebra, slot):
    """Exact F-solve of [x,A,A]=0 (slot='left') or [A,x,A]=0 ('middle')."""
    tower = algebra.tower
    basis_vecs = algebra.f_basis_vectors()
    n = len(basis_vecs)
    columns = [[] for _ in range(n)]
    for bi in basis_vecs:
        for bj in basis_vecs:
            for col, x in zip(columns, basis_vecs):
                if slot == "left":
                    assoc = algebra.associator(x, bi, bj)
                else:
                    assoc = algebra.associator(bi, x, bj)
                col.extend(algebra.f_coords(assoc))
    matrix = [[columns[j][i] for j in range(n)]
              for i in range(len(columns[0]))]
    null = linalg.nullspace(matrix, tower.zero, tower.one)
    return FSubspace(algebra, [algebra.from_f_coords(v) for v in null])


def embedded_field_subspace(algebra):
    """The copy of K inside S_f (degree-0 elements) as an F-subspace."""
    fb = algebra.tower.f_basis()
    basis = [algebra.scalar(fb.monomial_element(mono))
             for mono in fb.monomials]
    return FSubspace(algebra, basis, label="K")


def _check_equals_embedded_K(algebra, sub):
    emb = embedded_field_subspace(algebra)
    if sub.dim != emb.dim:
        return False
    return all(membership(algebra, sub, b) for b in emb.basis)


def left_nucleus(algebra):
    return _side_nucleus(algebra, "left")


def middle_nucleus(algebra):
    return _side_nucleus(algebra, "middle")


def _side_nucleus(algebra, slot):
    tower = algebra.tower
    if not tower.finite_over_constants:
        # structural answer: K is always contained in Nuc_l and Nuc_m,
        # and equals both when f is not two-sided; sample-verify
        import random
        rng = random.Random(7)
        for _ in range(20):
            a = algebra.random_element(rng)
            b = algebra.random_element(rng)
            x = algebra.scalar(tower.random_element(rng, max_deg=1))
            if slot == "left":
                assoc = algebra.associator(x, a, b)
            else:
                assoc = algebra.associator(a, x, b)
            if assoc:
                raise InternalInconsistency(
                    "sampled associator with K entry does not vanish")
        return FSubspace(algebra, [algebra.one,
                                   *(algebra.scalar(g)
                                     for g in tower.gens())],
                         label="K")
    sub = _associator_solve(algebra, slot)
    if not algebra.two_sided and not _check_equals_embedded_K(algebra, sub):
        raise InternalInconsistency(
            f"{slot} nucleus differs from K for a non-two-sided modulus")
    if algebra.two_sided:
        sub.label = "S_f"
    else:
        sub.label = "K"
    return sub


# --------------------------------------------------------------------------
# nucleus and center
# --------------------------------------------------------------------------

def nucleus_and_center(algebra):
    """(Nuc, Center) with exact bases; finite [K:F] only."""
    tower = algebra.tower
    if not tower.finite_over_constants:
        raise InfiniteDimension("nucleus_and_center needs finite [K:F]")
    nl = left_nucleus(algebra)
    nm = middle_nucleus(algebra)
    nr = right_nucleus(algebra)
    zero = tower.zero
    one = tower.one

    vl = _f_coord_vectors(algebra, nl.basis)
    vm = _f_coord_vectors(algebra, nm.basis)
    vr = _f_coord_vectors(algebra, nr.basis)
    inter = linalg.intersect(vl, vm, zero, one)
    inter = linalg.intersect(inter, vr, zero, one)
    nuc = FSubspace(algebra, [algebra.from_f_coords(v) for v in inter])

    # center: elements of Nuc commuting with an F-spanning set of S_f
    span = algebra.f_basis_vectors()
    center_elems = []
    if nuc.basis:
        cols = []
        for x in nuc.basis:
            col = []
            for s in span:
                comm = algebra.circ(x, s) - algebra.circ(s, x)
                col.extend(algebra.f_coords(comm))
            cols.append(col)
        matrix = [[cols[j][i] for j in range(len(nuc.basis))]
                  for i in range(len(cols[0]))]
        null = linalg.nullspace(matrix, zero, one)
        for v in null:
            acc = algebra.zero
            for c, b in zip(v, nuc.basis):
                if c:
                    acc = acc + b.scale(c)
            center_elems.append(acc)
    center = FSubspace(algebra, center_elems)
    return nuc, center


# --------------------------------------------------------------------------
# presentation by structure constants
# --------------------------------------------------------------------------

def presentation(sub):
    """Structure constants of a subspace closed under o, over F."""
    algebra = sub.ambient
    tower = algebra.tower
    zero = tower.zero
    one = tower.one
    basis = sub.basis
    products = [algebra.circ(a, b) for a in basis for b in basis]
    vecs = _f_coord_vectors(algebra, list(basis) + products + [algebra.one])
    basis_vecs = vecs[:len(basis)]
    matrix = [[v[i] for v in basis_vecs] for i in range(len(basis_vecs[0]))]
    constants = []
    idx = len(basis)
    for i in range(len(basis)):
        row_i = []
        for j in range(len(basis)):
            sol = linalg.solve(matrix, vecs[idx], zero, one)
            idx += 1
            if sol is None:
                raise NotClosed("subspace not closed under the product")
            row_i.append(sol)
        constants.append(row_i)
    unit = linalg.solve(matrix, vecs[-1], zero, one)
    # associativity of the presented algebra, on all basis triples
    for a in basis:
        for b in basis:
            for c in basis:
                if algebra.associator(a, b, c):
                    raise InternalInconsistency(
                        "presented subspace is not associative")
    return FAlgebraPresentation(sub, constants, unit)


# --------------------------------------------------------------------------
# A-polynomial detection
# --------------------------------------------------------------------------

def a_polynomial_test(algebra, cfg=None):
    """Thm-style eigenring dimension test: dim Nuc_r = m^2 certifies an
    A-polynomial; a bounded ansatz can never certify the negative."""
    tower = algebra.tower
    if tower.finite_over_constants:
        sub = right_nucleus(algebra)
        return APolyVerdict("Inconclusive", sub.dim, False,
                            note="characteristic p: eigenring dimension "
                                 "reported without the A-polynomial label")
    if cfg is None:
        cfg = default_ansatz(algebra)
    sub = right_nucleus(algebra, cfg)
    if sub.dim == algebra.m ** 2:
        return APolyVerdict("APolynomial", sub.dim, True)
    return APolyVerdict("Inconclusive", sub.dim, False,
                        note="dimension is a lower bound within the ansatz")
