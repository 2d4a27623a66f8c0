"""Pseudo-linear transformations T(v) = Av + delta(v), characteristic
polynomials through cyclic vectors, tensor products and resultants, and
bounded similarity search."""

from __future__ import annotations

import itertools
import random
from typing import NamedTuple

from . import linalg
from .errors import (
    ContextMismatch,
    DegreeMismatch,
    NoCyclicVectorFound,
    NotMonic,
)
from .ore import OrePoly, mod_r, right_divmod, right_gcd


class PseudoLinearTransform:
    """T on K^n given by a matrix A: T(v) = A v + delta(v) entrywise."""

    __slots__ = ("tower", "matrix")

    def __init__(self, tower, matrix):
        self.tower = tower
        self.matrix = [list(row) for row in matrix]

    @property
    def n(self):
        return len(self.matrix)

    def apply(self, v):
        out = []
        for i in range(self.n):
            s = v[i].derive()
            for j in range(self.n):
                a = self.matrix[i][j]
                if a and v[j]:
                    s = s + a * v[j]
            out.append(s)
        return out

    def __repr__(self):
        return f"PseudoLinearTransform(n={self.n})"


class CyclicCertificate(NamedTuple):
    vector: list
    charpoly: OrePoly


def zero_plt(tower, n):
    """T = delta entrywise (zero matrix)."""
    zero = tower.zero
    return PseudoLinearTransform(tower,
                                 [[zero] * n for _ in range(n)])


def from_polynomial(f):
    """T = left multiplication by t on K[t;delta]/K[t;delta]f over the
    basis {1, t, ..., t^{n-1}}."""
    if not f or not f.is_monic():
        raise NotMonic("from_polynomial needs a monic modulus")
    if f.deg < 1:
        raise NotMonic("modulus must have degree >= 1")
    tower = f.tower
    n = f.deg
    cols = []
    for i in range(n):
        image = mod_r(OrePoly.monomial(tower, tower.one, i + 1), f)
        cols.append([image.coeff(j) for j in range(n)])
    matrix = [[cols[j][i] for j in range(n)] for i in range(n)]
    return PseudoLinearTransform(tower, matrix)


def _cyclic_candidates(tower, n, seed):
    # the coset of 1 first: when it is cyclic (e.g. T built from a
    # modulus) the representative is the natural one
    for i in range(n):
        v = [tower.zero] * n
        v[i] = tower.one
        yield v
    gen = tower.gen(tower.rat_names[0])
    for shift in range(n):
        yield [gen ** ((i + shift) % (n + 1)) for i in range(n)]
    for k in range(10):
        rng = random.Random(seed + k)
        yield [tower.random_element(rng, max_deg=2, max_coeff=5)
               for _ in range(n)]


def characteristic_polynomial(T, seed=0, vector=None):
    """Monic h of degree n with sum h_i T^i(v) = 0 at a cyclic vector v.

    Candidates: random vectors of bounded height, then the standard
    basis, then generator-power vectors; the result is one representative
    of the similarity class (it depends on v).
    """
    tower = T.tower
    n = T.n
    zero = tower.zero
    one = tower.one
    candidates = ([vector] if vector is not None
                  else _cyclic_candidates(tower, n, seed))
    for v in candidates:
        iterates = [v]
        for _ in range(n):
            iterates.append(T.apply(iterates[-1]))
        matrix = [[iterates[j][i] for j in range(n)] for i in range(n)]
        if linalg.rank(matrix, zero, one) < n:
            continue
        rhs = [zero - x for x in iterates[n]]
        sol = linalg.solve(matrix, rhs, zero, one)
        if sol is None:
            continue
        h = OrePoly(tower, list(sol) + [one])
        # annihilation recheck
        acc = iterates[n]
        for i in range(n):
            if sol[i]:
                acc = [a + sol[i] * w for a, w in zip(acc, iterates[i])]
        if any(acc):
            continue
        return CyclicCertificate(v, h)
    raise NoCyclicVectorFound(
        f"no cyclic vector among the deterministic sweep (n={n})")


def tensor(T, Tp):
    """T x T' on K^{mn}: matrix A (x) I + I (x) B; the delta parts add up
    entrywise."""
    if T.tower is not Tp.tower:
        raise ContextMismatch("transforms live over different towers")
    tower = T.tower
    m, n = T.n, Tp.n
    zero = tower.zero
    size = m * n
    matrix = [[zero] * size for _ in range(size)]
    for i in range(m):
        for j in range(n):
            row = i * n + j
            for k in range(m):
                a = T.matrix[i][k]
                if a:
                    matrix[row][k * n + j] = matrix[row][k * n + j] + a
            for l in range(n):
                b = Tp.matrix[j][l]
                if b:
                    matrix[row][i * n + l] = matrix[row][i * n + l] + b
    return PseudoLinearTransform(tower, matrix)


def resultant(f, g, seed=0):
    """Characteristic polynomial of T_f x T_g; degree deg(f)*deg(g),
    defined up to similarity."""
    return characteristic_polynomial(
        tensor(from_polynomial(f), from_polynomial(g)), seed=seed).charpoly


# --------------------------------------------------------------------------
# similarity
# --------------------------------------------------------------------------

class SimilarityWitness(NamedTuple):
    u: OrePoly
    u_prime: OrePoly


class NotFoundWithinBound(NamedTuple):
    bound: int


def _comaximal_pick(tower, f, g, kernel_polys, seed=17):
    """First combination u of kernel elements with right_gcd(u, f) = 1."""
    candidates = list(kernel_polys)
    for a, b in itertools.combinations(kernel_polys, 2):
        candidates.append(a + b)
    rng = random.Random(seed)
    for _ in range(30):
        acc = OrePoly.zero(tower)
        for kp in kernel_polys:
            c = rng.randint(0, max(2, (tower.char or 3) - 1))
            if c:
                acc = acc + kp.scale(tower.from_int(c))
        candidates.append(acc)
    for u in candidates:
        if not u:
            continue
        if right_gcd(u, f).deg == 0:
            q, r = right_divmod(g * u, f)
            if not r and q * f == g * u:
                return SimilarityWitness(u, q)
    return None


def similarity_search(f, g, bound=None):
    """Witness (u, u') with u'f = gu and right_gcd(u, f) = 1, or an
    explicit NotFoundWithinBound.

    The condition mod_r(gu, f) = 0 is F-linear in u, so the kernel is
    computed exactly (finite [K:F]) or within a bounded ansatz (char 0).
    """
    if f.deg != g.deg:
        raise DegreeMismatch("similar polynomials must share their degree")
    if not f.is_monic() or not g.is_monic():
        raise NotMonic("similarity search expects monic inputs")
    tower = f.tower
    m = f.deg
    if tower.finite_over_constants:
        from .petit import PetitAlgebra, SfElement
        A = PetitAlgebra(f)
        basis = A.f_basis_vectors()
        cols = [A.f_coords(SfElement(A, mod_r(g * b.poly, f)))
                for b in basis]
        matrix = [[cols[j][i] for j in range(len(basis))]
                  for i in range(len(cols[0]))]
        null = linalg.nullspace(matrix, tower.zero, tower.one)
        kernel_polys = [A.from_f_coords(v).poly for v in null]
        used_bound = A.f_dimension()
    else:
        if bound is None:
            bound = 2 * m
        kernel_polys = _char0_kernel(f, g, bound)
        used_bound = bound
    witness = _comaximal_pick(tower, f, g, kernel_polys)
    if witness is None:
        return NotFoundWithinBound(used_bound)
    return witness


def _char0_kernel(f, g, bound):
    """Q-basis of {u in ansatz : mod_r(gu, f) = 0}; numerators of bounded
    degree over the product of the coefficient denominators of f and g."""
    from .nucleus import _monomial_elements, base_coordinate_rows
    from .petit import PetitAlgebra, SfElement

    tower = f.tower
    ring = tower._ring
    den_poly = ring.one
    for c in list(f.coeffs) + list(g.coeffs):
        for frac in c.terms.values():
            h = den_poly.gcd(frac.denom)
            den_poly = den_poly.quo(h) * frac.denom
    from .fields import Element
    den = Element(tower, {tower._zero_beta: tower._field.new(den_poly)})
    deg_den = max((sum(k) for k, _ in den_poly.terms()), default=0)
    monos = _monomial_elements(tower, bound + deg_den)
    m = f.deg
    unknowns = []
    residuals = []
    for i in range(m):
        for mono in monos:
            u = OrePoly.monomial(tower, mono / den, i)
            unknowns.append(u)
            residuals.append(mod_r(g * u, f))
    flat = [r.coeff(i) for r in residuals for i in range(m)]
    rows, keys = base_coordinate_rows(tower, flat)
    zero = tower.zero
    one = tower.one
    matrix = []
    for i in range(m):
        for k in keys:
            matrix.append([rows[j * m + i].get(k, zero)
                           for j in range(len(unknowns))])
    null = linalg.nullspace(matrix, zero, one)
    kernel = []
    for v in null:
        acc = OrePoly.zero(tower)
        for c, u in zip(v, unknowns):
            if c:
                acc = acc + u.scale(c)
        if acc:
            kernel.append(acc)
    return kernel
