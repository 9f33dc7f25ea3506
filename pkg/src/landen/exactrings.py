"""Exact coefficient rings: ZZ, QQ, prime fields GF(p) and cyclotomic integers.

Integers are plain Python ints and rationals are :class:`fractions.Fraction`.
The ring objects below give every coefficient type a common face
(``zero``, ``one``, coercion by calling the ring) so that
:class:`landen.multipoly.MultiPoly` can be generic over them.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import gcd


class NotRational(ValueError):
    """A cyclotomic integer was asked to descend to ZZ but is not an integer."""


class ConductorMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# rings
# ---------------------------------------------------------------------------


class IntegerRing:
    name = "ZZ"
    characteristic = 0
    is_field = False
    zero = 0
    one = 1

    def __call__(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{x} is not an integer")
            return x.numerator
        return int(x)

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("ZZ")

    def __repr__(self):
        return "ZZ"


class RationalField:
    name = "QQ"
    characteristic = 0
    is_field = True
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x):
        if isinstance(x, str):
            return Fraction(x)
        return Fraction(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


ZZ = IntegerRing()
QQ = RationalField()


def is_prime(n: int) -> bool:
    """Trial division; moduli here are small."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeFieldElem:
    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        self.value = value % modulus
        self.modulus = modulus

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElem):
            if other.modulus != self.modulus:
                raise ValueError("prime field elements with different moduli")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.modulus)
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElem(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElem(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElem(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElem(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElem(-self.value, self.modulus)

    def __pow__(self, e: int):
        return PrimeFieldElem(pow(self.value, e, self.modulus), self.modulus)

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError("inverse of 0 in GF(p)")
        return PrimeFieldElem(pow(self.value, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self * PrimeFieldElem(v, self.modulus).inverse()

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElem(v, self.modulus) * self.inverse()

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return False
        return (self.value - v) % self.modulus == 0

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.modulus})"

    def __str__(self):
        return str(self.value)


class PrimeField:
    is_field = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"Fp:{p}"
        self.zero = PrimeFieldElem(0, p)
        self.one = PrimeFieldElem(1, p)

    def __call__(self, x):
        if isinstance(x, PrimeFieldElem):
            if x.modulus != self.p:
                raise ValueError("wrong modulus")
            return x
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            return PrimeFieldElem(x.numerator, self.p) / x.denominator
        return PrimeFieldElem(int(x), self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


def GF(p: int) -> PrimeField:
    return PrimeField(p)


# ---------------------------------------------------------------------------
# cyclotomic polynomials and ZZ[zeta_m]
# ---------------------------------------------------------------------------

_cyclo_cache: dict[int, tuple[int, ...]] = {}
_cyclo_lock = threading.Lock()


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def _poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    # ascending coefficient lists, den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact division while building cyclotomic polynomial")
    return out


def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, constant term first.

    Built by dividing x^m - 1 by Phi_d for every proper divisor d of m.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if m < 1:
        raise ValueError("conductor must be positive")
    cached = _cyclo_cache.get(m)
    if cached is not None:
        return cached
    num = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m)[:-1]:
        num = _poly_exact_div(num, list(cyclotomic_polynomial(d)))
    result = tuple(num)
    with _cyclo_lock:
        _cyclo_cache.setdefault(m, result)
    return _cyclo_cache[m]


def euler_phi(m: int) -> int:
    return sum(1 for j in range(1, m + 1) if gcd(j, m) == 1)


class CyclotomicInt:
    """Element of ZZ[x]/(Phi_m(x)) with x standing for a primitive m-th root of unity.

    ``coeffs[i]`` is the coefficient of x^i; the tuple always has length
    deg Phi_m = euler_phi(m) and is kept reduced.
    """

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs=()):
        phi = cyclotomic_polynomial(m)
        n = len(phi) - 1
        c = [int(x) for x in coeffs]
        if len(c) > n:
            c = _reduce(c, phi)
        else:
            c = c + [0] * (n - len(c))
        self.m = m
        self.coeffs = tuple(c)

    @classmethod
    def from_int(cls, m: int, value: int) -> "CyclotomicInt":
        return cls(m, [value])

    def _lift(self, other):
        if isinstance(other, CyclotomicInt):
            if other.m != self.m:
                raise ConductorMismatch(f"conductors {self.m} and {other.m} differ")
            return other
        if isinstance(other, int):
            return CyclotomicInt(self.m, [other])
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return _make(self.m, tuple(x + y for x, y in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return _make(self.m, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return _make(self.m, tuple(x - y for x, y in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return _make(self.m, tuple(other * x for x in self.coeffs))
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return _make(self.m, tuple(_reduce(prod, cyclotomic_polynomial(self.m))))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are only defined for zeta_pow")
        result = CyclotomicInt.from_int(self.m, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exact_div_int(self, n: int) -> "CyclotomicInt":
        if any(c % n for c in self.coeffs):
            raise ArithmeticError(f"{self!r} is not divisible by {n}")
        return _make(self.m, tuple(c // n for c in self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        if isinstance(other, CyclotomicInt):
            return self.m == other.m and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if not any(self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash((self.m, self.coeffs))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*z{self.m}^{i}")
        return " + ".join(terms) if terms else "0"


def _make(m: int, coeffs: tuple) -> CyclotomicInt:
    obj = CyclotomicInt.__new__(CyclotomicInt)
    obj.m = m
    obj.coeffs = coeffs
    return obj


def _reduce(c: list[int], phi: tuple[int, ...]) -> list[int]:
    # phi is monic of degree n
    n = len(phi) - 1
    c = list(c)
    for i in range(len(c) - 1, n - 1, -1):
        lead = c[i]
        if lead:
            base = i - n
            for j in range(n):
                c[base + j] -= lead * phi[j]
        c[i] = 0
    return c[:n] + [0] * (n - len(c[:n]))


class CyclotomicRing:
    is_field = False
    characteristic = 0

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("conductor must be positive")
        self.m = m
        self.degree = len(cyclotomic_polynomial(m)) - 1
        self.name = f"ZZ[zeta_{m}]"
        self.zero = CyclotomicInt.from_int(m, 0)
        self.one = CyclotomicInt.from_int(m, 1)

    def __call__(self, x):
        if isinstance(x, CyclotomicInt):
            if x.m != self.m:
                raise ConductorMismatch(f"conductors {self.m} and {x.m} differ")
            return x
        if isinstance(x, (list, tuple)):
            return CyclotomicInt(self.m, x)
        return CyclotomicInt.from_int(self.m, ZZ(x))

    def zeta(self, t: int = 1) -> CyclotomicInt:
        return zeta_pow(self.m, t)

    def __eq__(self, other):
        return isinstance(other, CyclotomicRing) and other.m == self.m

    def __hash__(self):
        return hash(("cyclo", self.m))

    def __repr__(self):
        return self.name


def zeta_pow(m: int, t: int) -> CyclotomicInt:
    """zeta_m ** t for any integer t (negative allowed)."""
    t %= m
    if m == 1:
        return CyclotomicInt.from_int(1, 1)
    return CyclotomicInt(m, [0] * t + [1])


def galois_apply(x: CyclotomicInt, j: int) -> CyclotomicInt:
    """Apply the automorphism zeta_m -> zeta_m**j (gcd(j, m) must be 1)."""
    if gcd(j, x.m) != 1:
        raise ValueError(f"gcd({j}, {x.m}) != 1")
    out = CyclotomicInt.from_int(x.m, 0)
    for i, c in enumerate(x.coeffs):
        if c:
            out = out + zeta_pow(x.m, i * j) * c
    return out


def descend_to_integer(x: CyclotomicInt) -> int:
    if any(x.coeffs[1:]):
        raise NotRational(f"{x!r} is not in ZZ")
    return x.coeffs[0]
