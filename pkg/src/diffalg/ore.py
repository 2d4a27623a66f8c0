"""Arithmetic in R = K[t;delta]: t*a = a*t + delta(a).

Coefficients are stored lowest degree first with no trailing zeros;
deg(0) is a sentinel comparing less than every integer.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import ContextMismatch, DivisionByZero
from .fields import Element


class _NegInfinity:
    """deg(0); less than every integer."""

    def __lt__(self, other):
        return True

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return isinstance(other, _NegInfinity)

    def __eq__(self, other):
        return isinstance(other, _NegInfinity)

    def __hash__(self):
        return hash("deg(0)")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "-inf"


NEG_INF = _NegInfinity()


class OrePoly:
    """Element of K[t;delta] over a field tower."""

    __slots__ = ("tower", "coeffs")

    def __init__(self, tower, coeffs):
        while coeffs and not coeffs[-1]:
            coeffs = coeffs[:-1]
        self.tower = tower
        self.coeffs = tuple(coeffs)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, tower):
        return cls(tower, ())

    @classmethod
    def one(cls, tower):
        return cls(tower, (tower.one,))

    @classmethod
    def t(cls, tower):
        return cls(tower, (tower.zero, tower.one))

    @classmethod
    def constant(cls, tower, a):
        return cls(tower, (a,))

    @classmethod
    def monomial(cls, tower, coeff, power):
        return cls(tower, (tower.zero,) * power + (coeff,))

    # -- structure ------------------------------------------------------------

    @property
    def deg(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.tower.zero

    def lc(self):
        if not self.coeffs:
            raise DivisionByZero("leading coefficient of 0")
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.tower.one

    def monic(self):
        if not self.coeffs:
            raise DivisionByZero("cannot monicize 0")
        inv = self.lc().inverse()
        return OrePoly(self.tower, [inv * c for c in self.coeffs])

    def _check(self, other):
        if not isinstance(other, OrePoly):
            raise TypeError(f"expected OrePoly, got {type(other).__name__}")
        if other.tower is not self.tower:
            raise ContextMismatch("operands live over different towers")

    # -- additive ops ---------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return OrePoly(self.tower,
                       [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return OrePoly(self.tower,
                       [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self):
        return OrePoly(self.tower, [-c for c in self.coeffs])

    def scale(self, a):
        """Left multiplication by a in K (coefficientwise)."""
        if isinstance(a, int):
            a = self.tower.from_int(a)
        return OrePoly(self.tower, [a * c for c in self.coeffs])

    # -- multiplication -------------------------------------------------------

    def _t_shift(self):
        """t * self."""
        zero = self.tower.zero
        out = [zero] * (len(self.coeffs) + 1)
        for j, c in enumerate(self.coeffs):
            out[j + 1] = out[j + 1] + c
            dc = c.derive()
            if dc:
                out[j] = out[j] + dc
        return OrePoly(self.tower, out)

    def __mul__(self, other):
        if isinstance(other, (int, Element)):
            # right multiplication by a constant-degree element: treat as
            # multiplying by the degree-0 polynomial
            other = OrePoly.constant(
                self.tower,
                self.tower.from_int(other) if isinstance(other, int)
                else other)
        self._check(other)
        acc = OrePoly.zero(self.tower)
        cur = other
        for a in self.coeffs:
            if a:
                acc = acc + cur.scale(a)
            cur = cur._t_shift()
        return acc

    def __rmul__(self, other):
        if isinstance(other, (int, Element)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("Ore polynomial powers need n >= 0")
        result = OrePoly.one(self.tower)
        for _ in range(n):
            result = result * self
        return result

    def __truediv__(self, other):
        """Division by a degree-0 polynomial or element only."""
        if isinstance(other, (int, Element)):
            other = OrePoly.constant(
                self.tower,
                self.tower.from_int(other) if isinstance(other, int)
                else other)
        self._check(other)
        if not other:
            raise DivisionByZero("division by zero")
        if other.deg != 0:
            raise DivisionByZero(
                "only division by degree-0 elements is defined")
        inv = other.coeffs[0].inverse()
        return OrePoly(self.tower, [c * inv for c in self.coeffs])

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, OrePoly):
            return NotImplemented
        return self.tower is other.tower and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.tower), self.coeffs))

    # -- printing -------------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = str(c)
            if i == 0:
                # constant terms join the sum without wrapping
                if not pieces:
                    pieces.append(cs)
                else:
                    pieces.append(cs if cs.startswith("-") else f"+{cs}")
                continue
            composite = "/" in cs or any(ch in cs[1:] for ch in "+-")
            if composite and cs.startswith("(") and cs.endswith(")") \
                    and "/" in cs:
                composite = False  # already printed as (num)/(den)
            negative = cs.startswith("-") and not composite
            body = cs[1:] if negative else cs
            wrapped = f"({body})" if composite else body
            tpart = "t" if i == 1 else f"t^{i}"
            term = tpart if body == "1" else f"{wrapped}*{tpart}"
            if not pieces:
                pieces.append(f"-{term}" if negative else term)
            else:
                pieces.append(f"-{term}" if negative else f"+{term}")
        return "".join(pieces)

    def __repr__(self):
        return f"OrePoly({self})"


class DivMod(NamedTuple):
    quotient: OrePoly
    remainder: OrePoly


def mul(f, g):
    return f * g


def right_divmod(g, f):
    """q, r with g = q*f + r and deg(r) < deg(f)."""
    g._check(f)
    if not f:
        raise DivisionByZero("right division by zero")
    tower = g.tower
    q = OrePoly.zero(tower)
    r = g
    flc_inv = f.lc().inverse()
    while r.deg >= f.deg:
        shift = r.deg - f.deg
        c = r.lc() * flc_inv
        term = OrePoly.monomial(tower, c, shift)
        q = q + term
        r = r - term * f
    return DivMod(q, r)


def left_divmod(g, f):
    """q, r with g = f*q + r and deg(r) < deg(f)."""
    g._check(f)
    if not f:
        raise DivisionByZero("left division by zero")
    tower = g.tower
    q = OrePoly.zero(tower)
    r = g
    flc_inv = f.lc().inverse()
    while r.deg >= f.deg:
        shift = r.deg - f.deg
        c = flc_inv * r.lc()
        term = OrePoly.monomial(tower, c, shift)
        q = q + term
        r = r - f * term
    return DivMod(q, r)


def mod_r(g, f):
    """Remainder of right division of g by f."""
    return right_divmod(g, f).remainder


def right_gcd(f, g):
    """Monic d with Rf + Rg = Rd (Euclid on right remainders)."""
    if not f and not g:
        raise DivisionByZero("right gcd of 0 and 0")
    a, b = f, g
    while b:
        a, b = b, mod_r(a, b)
    return a.monic()


def linear_power(tower, b, n):
    """(t - b)^n by repeated multiplication."""
    if n < 1:
        raise ValueError("n must be >= 1")
    lin = OrePoly(tower, (-b, tower.one))
    return lin ** n
