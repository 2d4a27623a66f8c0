"""Coefficient fields K: towers over Q or F_p carrying a derivation.

A tower is built from ordered layers: Rational(name) adjoins a
transcendental generator, PInsep(name, alpha) adjoins u with u^p = alpha
(characteristic p only, alpha a constant of the derivation).  Elements
are exact: fractions of sparse polynomials in the rational generators
(via sympy's fraction-field domains) tensored with the inseparable
monomials u^beta, beta < p componentwise.

In characteristic p with g layers, K has the monomial basis of all
generator products with exponents < p over F = Const(delta); the tower
is certified by checking dim_F ker(delta) = 1.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.fields import field as _make_frac_field

from . import linalg
from .errors import (
    ConstantFieldTooLarge,
    DiffalgError,
    InfiniteDimension,
    NonConstantAlpha,
    SessionTypeError,
    UnsupportedCombination,
)
from .exprs import parse_expr


def _lcm(a, b):
    g = a.gcd(b)
    return a.quo(g) * b


class Element:
    """Exact member of a tower field K, in canonical form.

    terms maps an inseparable exponent tuple (componentwise < p) to a
    fraction of polynomials in the rational generators; zero fractions
    are never stored.
    """

    __slots__ = ("tower", "terms")

    def __init__(self, tower, terms):
        self.tower = tower
        # monic denominators make the representation unique (sympy does
        # not normalize unit factors over GF(p))
        self.terms = {b: tower._monic_denom(c) for b, c in terms.items()}

    # -- construction helpers -------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Element):
            if other.tower is not self.tower:
                raise DiffalgError("elements from different towers")
            return other
        if isinstance(other, (int, Fraction)):
            return self.tower.from_rational(other)
        return NotImplemented

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for beta, c in other.terms.items():
            s = terms.get(beta, self.tower._fzero) + c
            if s:
                terms[beta] = s
            else:
                terms.pop(beta, None)
        return Element(self.tower, terms)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.tower, {b: -c for b, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        raw = {}
        for b1, c1 in self.terms.items():
            for b2, c2 in other.terms.items():
                key = tuple(x + y for x, y in zip(b1, b2))
                prod = c1 * c2
                if key in raw:
                    raw[key] = raw[key] + prod
                else:
                    raw[key] = prod
        return self.tower._reduce_raw(raw)

    __rmul__ = __mul__

    def inverse(self):
        tower = self.tower
        if not self.terms:
            raise ZeroDivisionError("inverse of zero tower element")
        if len(self.terms) == 1:
            (beta, c), = self.terms.items()
            if not any(beta):
                return Element(tower, {beta: 1 / c})
        # invert inside the finite inseparable-monomial algebra over the
        # rational subfield
        monomials = tower._pinsep_monomials()
        index = {m: i for i, m in enumerate(monomials)}
        cols = []
        for mon in monomials:
            prod = self * tower._pinsep_monomial_element(mon)
            col = [tower._fzero] * len(monomials)
            for beta, c in prod.terms.items():
                col[index[beta]] = c
            cols.append(col)
        matrix = [[cols[j][i] for j in range(len(monomials))]
                  for i in range(len(monomials))]
        rhs = [tower._fzero] * len(monomials)
        rhs[index[tuple([0] * tower.num_pinsep)]] = tower._fone
        sol = linalg.solve(matrix, rhs, tower._fzero, tower._fone)
        if sol is None:
            raise DiffalgError(
                "element has no inverse; inseparable layer is degenerate")
        terms = {m: c for m, c in zip(monomials, sol) if c}
        return Element(tower, terms)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.tower.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- structure ------------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.tower.from_rational(other)
        if not isinstance(other, Element) or other.tower is not self.tower:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((id(self.tower), tuple(sorted(self.terms.items(),
                                                  key=lambda kv: kv[0]))))

    def derive(self):
        return self.tower.derive(self)

    def is_constant(self):
        return not self.tower.derive(self)

    def __str__(self):
        return self.tower.element_str(self)

    def __repr__(self):
        return f"Element({self})"


class KSubspace:
    """F-subspace of K given by a basis of elements."""

    def __init__(self, tower, basis):
        self.tower = tower
        self.basis = basis

    @property
    def dim(self):
        return len(self.basis)


class FBasis:
    """Monomial F-basis of a finite characteristic-p tower.

    Basis monomials are all generator products with exponents < p, in
    layer order; coordinates are elements of F represented inside K.
    """

    def __init__(self, tower):
        self.tower = tower
        p = tower.char
        # only generators moved by delta enlarge K over F; constant
        # generators (e.g. carriers of inseparable targets) lie in F
        self.contrib_rat = [i for i, n in enumerate(tower.rat_names)
                            if tower._delta[n]]
        self.contrib_pin = [i for i, n in enumerate(tower.pinsep_names)
                            if tower._delta[n]]
        self.num_contrib = len(self.contrib_rat) + len(self.contrib_pin)
        self.monomials = list(
            itertools.product(range(p), repeat=self.num_contrib))
        self.dim = p ** self.num_contrib
        self._index = {m: i for i, m in enumerate(self.monomials)}

    def _contrib_names(self):
        tower = self.tower
        return ([tower.rat_names[i] for i in self.contrib_rat]
                + [tower.pinsep_names[i] for i in self.contrib_pin])

    def monomial_element(self, exps):
        tower = self.tower
        elem = tower.one
        for name, e in zip(self._contrib_names(), exps):
            if e:
                elem = elem * tower.gen(name) ** e
        return elem

    def coords(self, a):
        """F-coordinates of a in the monomial basis, as elements of K."""
        tower = self.tower
        p = tower.char
        ring = tower._ring
        contrib_rat = set(self.contrib_rat)
        contrib_pin = set(self.contrib_pin)
        # common denominator over the rational generators
        D = ring.one
        for c in a.terms.values():
            D = _lcm(D, c.denom)
        Dp1 = D ** (p - 1)
        Dp = tower._field.new(D ** p)
        buckets = {}
        for beta, c in a.terms.items():
            key_pin = tuple(beta[i] for i in self.contrib_pin)
            rest_pin = tuple(0 if i in contrib_pin else b
                             for i, b in enumerate(beta))
            M = c.numer * D.quo(c.denom) * Dp1
            for k, coeff in M.terms():
                key_rat = tuple(k[i] % p for i in self.contrib_rat)
                high = tuple((ki // p) * p if i in contrib_rat else ki
                             for i, ki in enumerate(k))
                frac = tower._field.new(ring.from_dict({high: coeff})) / Dp
                scalar = Element(tower, {rest_pin: frac})
                key = key_rat + key_pin
                if key in buckets:
                    buckets[key] = buckets[key] + scalar
                else:
                    buckets[key] = scalar
        return [buckets.get(m, tower.zero) for m in self.monomials]

    def from_coords(self, coords):
        tower = self.tower
        acc = tower.zero
        for c, mono in zip(coords, self.monomials):
            if c:
                acc = acc + c * self.monomial_element(mono)
        return acc


class FieldTower:
    """Coefficient field K with derivation delta; built via make_tower."""

    def __init__(self, base, layers, delta=None, certify=True):
        delta = dict(delta or {})
        if base == "Q":
            self.char = 0
            self.domain = QQ
            self.base_name = "Q"
        elif isinstance(base, int):
            if not isprime(base):
                raise UnsupportedCombination(f"{base} is not prime")
            self.char = base
            self.domain = GF(base)
            self.base_name = f"F{base}"
        else:
            raise UnsupportedCombination(f"unknown base field {base!r}")

        self.layers = list(layers)
        self.layer_kinds = []           # (kind, name) in layer order
        rat_names = []
        pinsep_specs = []               # (name, alpha_src)
        for layer in self.layers:
            kind = layer[0]
            if kind == "rational":
                _, name = layer
                rat_names.append(name)
                self.layer_kinds.append(("rational", name))
            elif kind == "pinsep":
                _, name, alpha_src = layer
                if self.char == 0:
                    raise UnsupportedCombination(
                        "inseparable layers need prime characteristic")
                pinsep_specs.append((name, alpha_src))
                self.layer_kinds.append(("pinsep", name))
            else:
                raise UnsupportedCombination(f"unknown layer kind {kind!r}")
        names = [name for _, name in self.layer_kinds]
        if len(set(names)) != len(names):
            raise UnsupportedCombination("duplicate generator names")
        if not rat_names:
            raise UnsupportedCombination(
                "tower needs at least one rational layer")

        self.rat_names = rat_names
        self.pinsep_names = [name for name, _ in pinsep_specs]
        self.num_pinsep = len(self.pinsep_names)
        self._zero_beta = tuple([0] * self.num_pinsep)

        self._field, *gens = _make_frac_field(rat_names, self.domain)
        self._ring = gens[0].numer.ring if gens else None
        self._fzero = self._field.zero
        self._fone = self._field.one
        self._rat_gens = dict(zip(rat_names, gens))
        self._pinsep_index = {n: i for i, n in enumerate(self.pinsep_names)}

        self.zero = Element(self, {})
        self.one = Element(self, {self._zero_beta: self._fone})

        # resolve inseparable targets layer by layer (earlier names only)
        self._alphas = [None] * self.num_pinsep
        visible = []
        for kind, name in self.layer_kinds:
            if kind == "pinsep":
                src = dict(pinsep_specs)[name]
                alpha = self._eval(src, allowed=visible)
                if not alpha:
                    raise NonConstantAlpha(
                        f"alpha for layer {name} must be nonzero")
                self._alphas[self._pinsep_index[name]] = alpha
            visible.append(name)

        # derivation images (default 0)
        self._delta = {}
        for kind, name in self.layer_kinds:
            src = delta.pop(name, None)
            if src is None:
                self._delta[name] = self.zero
            elif isinstance(src, Element):
                self._delta[name] = src
            else:
                self._delta[name] = self._eval(src, allowed=names)
        if delta:
            raise UnsupportedCombination(
                f"derivation given for unknown generators: {sorted(delta)}")

        # alpha constancy (needs the derivation)
        for (name, _), alpha in zip(pinsep_specs, self._alphas):
            if self.derive(alpha):
                raise NonConstantAlpha(
                    f"delta(alpha) != 0 for inseparable layer {name}")

        if not any(self._delta[n] for n in names):
            raise ConstantFieldTooLarge(
                "derivation is zero; every element is constant")

        self._fbasis = None
        self.certified = False
        if self.char and certify:
            self.certify_constants()

        if self.char:
            parts = []
            for kind, name in self.layer_kinds:
                if self._delta[name]:
                    parts.append(f"{name}^{self.char}")
                else:
                    parts.append(name)
            self.constant_descr = f"F{self.char}({','.join(parts)})"
        else:
            self.constant_descr = "Q"

    # -- basic accessors ------------------------------------------------------

    def gen(self, name):
        if name in self._rat_gens:
            return Element(self, {self._zero_beta: self._rat_gens[name]})
        if name in self._pinsep_index:
            beta = [0] * self.num_pinsep
            beta[self._pinsep_index[name]] = 1
            return Element(self, {tuple(beta): self._fone})
        raise DiffalgError(f"unknown generator {name!r}")

    def gens(self):
        return [self.gen(name) for _, name in self.layer_kinds]

    def from_int(self, n):
        frac = self._field(n)
        if not frac:
            return self.zero
        return Element(self, {self._zero_beta: frac})

    def from_rational(self, q):
        if isinstance(q, int):
            return self.from_int(q)
        if self.char:
            return self.from_int(q.numerator) / self.from_int(q.denominator)
        frac = self._field(q.numerator) / self._field(q.denominator)
        if not frac:
            return self.zero
        return Element(self, {self._zero_beta: frac})

    def _eval(self, src, allowed):
        if isinstance(src, Element):
            return src
        allowed = set(allowed)

        def lookup(name, line, col):
            if name not in allowed:
                raise SessionTypeError(
                    f"line {line}, col {col}: name {name!r} not in scope")
            return self.gen(name)

        return parse_expr(str(src), lookup, self.from_int)

    def parse_element(self, text):
        """Parse an element expression over the tower generators."""
        return self._eval(text, allowed=[n for _, n in self.layer_kinds])

    def _monic_denom(self, c):
        lc = c.denom.LC
        if lc == self.domain.one:
            return c
        inv = self.domain.quo(self.domain.one, lc)
        return self._field.raw_new(c.numer.mul_ground(inv),
                                   c.denom.mul_ground(inv))

    # -- inseparable reduction ------------------------------------------------

    def _reduce_raw(self, raw):
        p = self.char
        plain = {}
        overflow = []
        for beta, c in raw.items():
            if not c:
                continue
            if not p or all(b < p for b in beta):
                if beta in plain:
                    s = plain[beta] + c
                    if s:
                        plain[beta] = s
                    else:
                        del plain[beta]
                else:
                    plain[beta] = c
            else:
                overflow.append((beta, c))
        out = Element(self, plain)
        for beta, c in overflow:
            res = tuple(b % p for b in beta)
            term = Element(self, {res: c})
            for i, b in enumerate(beta):
                q = b // p
                if q:
                    term = term * (self._alphas[i] ** q)
            out = out + term
        return out

    def _pinsep_monomials(self):
        return list(itertools.product(range(self.char), repeat=self.num_pinsep))

    def _pinsep_monomial_element(self, beta):
        return Element(self, {tuple(beta): self._fone})

    def _split_layer_exps(self, exps):
        """Layer-order exponent tuple -> (rational exps, pinsep exps)."""
        r = []
        beta = []
        for (kind, _), e in zip(self.layer_kinds, exps):
            (r if kind == "rational" else beta).append(e)
        return tuple(r), tuple(beta)

    # -- derivation -----------------------------------------------------------

    def derive(self, a):
        """delta(a), extended by additivity, Leibniz and the quotient rule."""
        total = self.zero
        for beta, c in a.terms.items():
            mono = self._pinsep_monomial_element(beta)
            # delta of the rational-function coefficient (chain rule)
            dc = self.zero
            for name in self.rat_names:
                img = self._delta[name]
                if img:
                    partial = c.diff(self._rat_gens[name])
                    if partial:
                        dc = dc + Element(self, {self._zero_beta: partial}) * img
            total = total + dc * mono
            # product rule over the inseparable monomial
            for i, b in enumerate(beta):
                if not b:
                    continue
                img = self._delta[self.pinsep_names[i]]
                if not img:
                    continue
                lowered = list(beta)
                lowered[i] -= 1
                part = Element(self, {tuple(lowered): c})
                total = total + part * img * self.from_int(b)
        return total

    def is_constant(self, a):
        return not self.derive(a)

    # -- finite F-structure ---------------------------------------------------

    @property
    def finite_over_constants(self):
        return self.char != 0

    @property
    def finite_exponent(self):
        """e with [K:F] = p^e, counting generators moved by delta."""
        if not self.char:
            raise InfiniteDimension("[K:F] is infinite in characteristic 0")
        return self.f_basis().num_contrib

    def f_basis(self):
        if not self.char:
            raise InfiniteDimension("no finite F-basis in characteristic 0")
        if self._fbasis is None:
            self._fbasis = FBasis(self)
        return self._fbasis

    def constant_kernel(self):
        """ker(delta) as an F-subspace of K, with basis."""
        fb = self.f_basis()
        cols = [fb.coords(self.derive(fb.monomial_element(m)))
                for m in fb.monomials]
        matrix = [[cols[j][i] for j in range(fb.dim)] for i in range(fb.dim)]
        null = linalg.nullspace(matrix, self.zero, self.one)
        return KSubspace(self, [fb.from_coords(v) for v in null])

    def certify_constants(self):
        kernel = self.constant_kernel()
        if kernel.dim != 1:
            raise ConstantFieldTooLarge(
                f"ker(delta) has dimension {kernel.dim}, expected 1")
        self.certified = True
        return kernel

    # -- sampling -------------------------------------------------------------

    def random_element(self, rng, max_deg=2, max_coeff=4, denominator=False):
        """Random element with small polynomial numerator (and denominator).

        Denominators only involve rational generators; inverting
        inseparable generators is exact but blows up coefficient sizes.
        """
        def poly(names):
            acc = self.zero
            for _ in range(max_deg + 1):
                coeff = rng.randint(-max_coeff, max_coeff)
                if not coeff:
                    continue
                term = self.from_int(coeff)
                for name in names:
                    e = rng.randint(0, max_deg)
                    if e:
                        term = term * self.gen(name) ** e
                acc = acc + term
            return acc

        num = poly([n for _, n in self.layer_kinds])
        if not denominator:
            return num
        den = self.zero
        while not den:
            den = poly(self.rat_names) + self.from_int(
                rng.randint(1, max_coeff))
        return num / den

    # -- printing -------------------------------------------------------------

    def _coeff_str(self, coeff):
        if self.char:
            return str(int(coeff) % self.char)
        q = Fraction(int(coeff.numerator), int(coeff.denominator))
        return str(q)

    def _term_str(self, exps, coeff, *, skip_unit_coeff=True):
        names = [name for _, name in self.layer_kinds]
        parts = []
        for name, e in zip(names, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        cstr = self._coeff_str(coeff)
        if not parts:
            return cstr
        mono = "*".join(parts)
        if skip_unit_coeff and cstr == "1":
            return mono
        return f"{cstr}*{mono}"

    def _poly_str(self, terms):
        """terms: list of (layer-order exps, base coefficient)."""
        terms = sorted(terms, key=lambda t: (sum(t[0]), t[0]), reverse=True)
        pieces = []
        for exps, coeff in terms:
            if self.char == 0 and coeff < 0:
                sign = "-"
                body = self._term_str(exps, -coeff)
            else:
                sign = "+"
                body = self._term_str(exps, coeff)
            if not pieces:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f"{sign}{body}")
        return "".join(pieces) if pieces else "0"

    def _merge_exps(self, rat_exps, beta):
        out = []
        ri = 0
        bi = 0
        for kind, _ in self.layer_kinds:
            if kind == "rational":
                out.append(rat_exps[ri])
                ri += 1
            else:
                out.append(beta[bi])
                bi += 1
        return tuple(out)

    def element_str(self, a):
        if not a.terms:
            return "0"
        ring = self._ring
        D = ring.one
        for c in a.terms.values():
            D = _lcm(D, c.denom)
        lc = D.LC
        num_terms = []
        for beta, c in a.terms.items():
            M = c.numer * D.quo(c.denom)
            for k, coeff in M.terms():
                num_terms.append((self._merge_exps(k, beta), coeff / lc))
        num_str = self._poly_str(num_terms)
        if D == ring.one:
            return num_str
        den_terms = [(self._merge_exps(k, self._zero_beta), coeff / lc)
                     for k, coeff in D.terms()]
        den_str = self._poly_str(den_terms)
        return f"({num_str})/({den_str})"

    def __repr__(self):
        layer_str = ",".join(name for _, name in self.layer_kinds)
        return f"FieldTower({self.base_name}({layer_str}))"


def make_tower(base, layers, delta=None, certify=True):
    """Build a field tower; in finite characteristic-p cases the
    constant-field certification (dim_F ker delta = 1) runs unless
    certify=False."""
    return FieldTower(base, layers, delta=delta, certify=certify)
