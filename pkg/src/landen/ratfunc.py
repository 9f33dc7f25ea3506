"""Rational functions of formal degree d, projective points, Laurent prefixes.

Coefficients follow the descending convention used throughout the package:
``num[0]`` multiplies z**d and ``num[d]`` is the constant term.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .exactrings import QQ, GF, PrimeField, PrimeFieldElem


# ---------------------------------------------------------------------------
# dense univariate helpers over a field (ascending coefficient lists)
# ---------------------------------------------------------------------------


def trim(p: list) -> list:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def poly_mul(p: Sequence, q: Sequence, zero) -> list:
    if not p or not q:
        return []
    out = [zero] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] = out[i + j] + x * y
    return trim(out)


def poly_add(p: Sequence, q: Sequence, zero) -> list:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else zero) + (q[i] if i < len(q) else zero) for i in range(n)])


def poly_divmod(p: Sequence, q: Sequence) -> tuple[list, list]:
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = trim(p)
    if len(r) < len(q):
        return [], r
    zero = q[-1] - q[-1]
    quot = [zero] * (len(r) - len(q) + 1)
    lead = q[-1]
    while len(r) >= len(q) and r:
        c = r[-1] / lead
        s = len(r) - len(q)
        quot[s] = c
        for i, y in enumerate(q):
            r[s + i] = r[s + i] - c * y
        r = trim(r[:-1]) if not r[-1] else trim(r)
    return trim(quot), r


def poly_gcd(p: Sequence, q: Sequence) -> list:
    """Monic gcd over a field."""
    a, b = trim(p), trim(q)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


def _field_of(name: str):
    if name == "Q":
        return QQ
    if name.startswith("Fp:"):
        return GF(int(name[3:]))
    raise ValueError(f"unknown field {name!r}")


def _field_name(field) -> str:
    return "Q" if field == QQ else f"Fp:{field.p}"


class RatFunc:
    """phi(z) = (a_0 z^d + ... + a_d) / (b_0 z^d + ... + b_d) over QQ or GF(p)."""

    __slots__ = ("d", "num", "den", "field")

    def __init__(self, num: Sequence, den: Sequence, d: int | None = None, field=QQ):
        if d is None:
            d = max(len(num), len(den)) - 1
        if len(num) > d + 1 or len(den) > d + 1:
            raise ValueError("coefficient list longer than formal degree allows")
        pad = lambda c: [field(0)] * (d + 1 - len(c)) + [field(x) for x in c]
        self.d = d
        self.num = tuple(pad(num))
        self.den = tuple(pad(den))
        self.field = field
        if not any(self.den):
            raise ZeroDivisionError("denominator is identically zero")

    # ascending views
    def num_poly(self) -> list:
        return trim(self.num[::-1])

    def den_poly(self) -> list:
        return trim(self.den[::-1])

    @classmethod
    def from_polys(cls, num: Sequence, den: Sequence, field=QQ, d: int | None = None):
        """Build from ascending coefficient lists."""
        num, den = trim(num), trim(den)
        if d is None:
            d = max(len(num), len(den), 1) - 1
        return cls(list(num[::-1]), list(den[::-1]), d, field)

    def true_degree(self) -> int:
        num, den = self.num_poly(), self.den_poly()
        if not num:
            return 0
        g = poly_gcd(num, den)
        num = poly_divmod(num, g)[0]
        den = poly_divmod(den, g)[0]
        return max(len(num), len(den)) - 1

    def reduced(self) -> "RatFunc":
        """Common factors removed, monic denominator, formal degree = true degree."""
        num, den = self.num_poly(), self.den_poly()
        if not num:
            return RatFunc([], [1], 0, self.field)
        g = poly_gcd(num, den)
        num = poly_divmod(num, g)[0]
        den = poly_divmod(den, g)[0]
        lead = den[-1]
        num = [c / lead for c in num]
        den = [c / lead for c in den]
        return RatFunc.from_polys(num, den, self.field)

    def is_zero(self) -> bool:
        return not any(self.num)

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        zero = self.field(0)
        lhs = poly_mul(self.num_poly(), other.den_poly(), zero)
        rhs = poly_mul(other.num_poly(), self.den_poly(), zero)
        return trim(lhs) == trim(rhs)

    def __hash__(self):
        r = self.reduced()
        return hash((r.num, r.den))

    def __add__(self, other: "RatFunc") -> "RatFunc":
        zero = self.field(0)
        num = poly_add(poly_mul(self.num_poly(), other.den_poly(), zero),
                       poly_mul(other.num_poly(), self.den_poly(), zero), zero)
        den = poly_mul(self.den_poly(), other.den_poly(), zero)
        return RatFunc.from_polys(num, den, self.field, d=self.d + other.d)

    def scale(self, c) -> "RatFunc":
        c = self.field(c)
        return RatFunc([x * c for x in self.num], list(self.den), self.d, self.field)

    def reciprocal(self) -> "RatFunc":
        return RatFunc(list(self.den), list(self.num), self.d, self.field)

    def __call__(self, x):
        x = self.field(x)
        ev = lambda cs: sum((c * x ** (self.d - i) for i, c in enumerate(cs)), self.field(0))
        return ev(self.num) / ev(self.den)

    def __repr__(self):
        return f"RatFunc(num={[str(c) for c in self.num]}, den={[str(c) for c in self.den]}, d={self.d}, field={_field_name(self.field)})"

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "num": [str(c) for c in self.num],
            "den": [str(c) for c in self.den],
            "field": _field_name(self.field),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "RatFunc":
        field = _field_of(obj.get("field", "Q"))
        conv = (lambda s: Fraction(s)) if field == QQ else (lambda s: field(Fraction(s)))
        return cls([conv(s) for s in obj["num"]], [conv(s) for s in obj["den"]], int(obj["d"]), field)


def true_degree(phi: RatFunc) -> int:
    return phi.true_degree()


# ---------------------------------------------------------------------------
# Laurent expansion at z = 0
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LaurentPrefix:
    """Coefficients of z**start .. z**(start + len(coeffs) - 1).

    Every exponent below ``start`` has coefficient zero; exponents at or past
    ``start + len(coeffs)`` are unknown.
    """

    start: int
    coeffs: tuple
    order: int = field(default=-1)

    def __post_init__(self):
        if self.order < 0:
            object.__setattr__(self, "order", len(self.coeffs))

    @property
    def end(self) -> int:
        return self.start + len(self.coeffs)

    def coeff(self, n: int):
        if n < self.start:
            return 0
        if n >= self.end:
            raise IndexError(f"z^{n} lies beyond the truncation order")
        return self.coeffs[n - self.start]

    def agrees_with(self, other: "LaurentPrefix") -> bool:
        lo = min(self.start, other.start)
        hi = min(self.end, other.end)
        return all(self.coeff(n) == other.coeff(n) for n in range(lo, hi))

    def __add__(self, other: "LaurentPrefix") -> "LaurentPrefix":
        lo = min(self.start, other.start)
        hi = min(self.end, other.end)
        return LaurentPrefix(lo, tuple(self.coeff(n) + other.coeff(n) for n in range(lo, hi)))

    def __mul__(self, other: "LaurentPrefix") -> "LaurentPrefix":
        n = min(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            s = 0
            for j in range(i + 1):
                s = s + self.coeffs[j] * other.coeffs[i - j]
            out.append(s)
        return LaurentPrefix(self.start + other.start, tuple(out))


def _valuation(p: list) -> int:
    for i, c in enumerate(p):
        if c:
            return i
    return len(p)


def laurent_expand(phi: RatFunc, N: int) -> LaurentPrefix:
    """First N Laurent coefficients of phi at z = 0, starting at its order of vanishing."""
    num, den = phi.num_poly(), phi.den_poly()
    zero = phi.field(0)
    if not num:
        return LaurentPrefix(0, tuple([zero] * N))
    f, e = _valuation(num), _valuation(den)
    num, den = num[f:], den[e:]
    c0 = den[0]
    out = []
    for n in range(N):
        s = num[n] if n < len(num) else zero
        for i in range(1, min(n, len(den) - 1) + 1):
            s = s - den[i] * out[n - i]
        out.append(s / c0)
    return LaurentPrefix(f - e, tuple(out))


# ---------------------------------------------------------------------------
# projective points
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]


def normalize_proj(coords: Sequence) -> ProjPoint:
    """Canonical representative of a point of projective space.

    Over ZZ/QQ: integer coordinates with content 1 and the first nonzero
    coordinate positive. Over GF(p): first nonzero coordinate equal to 1.
    """
    coords = list(coords)
    if not any(coords):
        raise ValueError("all-zero coordinates do not define a projective point")
    if any(isinstance(c, PrimeFieldElem) for c in coords):
        lead = next(c for c in coords if c)
        return ProjPoint(tuple(c / lead for c in coords))
    fr = [Fraction(c) for c in coords]
    den = 1
    for c in fr:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in fr]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    if next(c for c in ints if c) < 0:
        ints = [-c for c in ints]
    return ProjPoint(tuple(ints))
