"""Sparse multivariate polynomials over an exact coefficient ring.

A :class:`MultiPoly` is a mapping from exponent tuples (aligned with an
ordered tuple of variable names) to nonzero coefficients. Terms are
reported in graded-lexicographic order, largest first.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

from .exactrings import QQ, ZZ, CyclotomicInt, CyclotomicRing, GF, PrimeFieldElem


class NotDivisible(ArithmeticError):
    """Raised by :meth:`MultiPoly.exact_divide` when the remainder is nonzero."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


def a_vars(d: int) -> tuple[str, ...]:
    return tuple(f"a{i}" for i in range(d + 1))


def b_vars(d: int) -> tuple[str, ...]:
    return tuple(f"b{i}" for i in range(d + 1))


def landen_vars(d: int, x: str = "z") -> tuple[str, ...]:
    """The canonical variable set {x} + {a_0..a_d} + {b_0..b_d}."""
    return (x,) + a_vars(d) + b_vars(d)


def _grlex_key(e):
    return (sum(e), e)


class MultiPoly:
    __slots__ = ("vars", "ring", "terms")

    def __init__(self, vars: Iterable[str], terms: Mapping | None = None, ring=ZZ):
        self.vars = tuple(vars)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"duplicate variable names in {self.vars}")
        self.ring = ring
        clean = {}
        if terms:
            n = len(self.vars)
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != n:
                    raise ValueError(f"exponent {e} does not match variables {self.vars}")
                c = ring(c)
                if c:
                    clean[e] = c
        self.terms = clean

    @classmethod
    def _raw(cls, vars, terms, ring):
        obj = cls.__new__(cls)
        obj.vars = vars
        obj.ring = ring
        obj.terms = terms
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c, vars, ring=ZZ) -> "MultiPoly":
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): c}, ring)

    @classmethod
    def var(cls, name: str, vars, ring=ZZ) -> "MultiPoly":
        vars = tuple(vars)
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return cls(vars, {tuple(e): ring.one}, ring)

    @classmethod
    def gens(cls, vars, ring=ZZ) -> dict[str, "MultiPoly"]:
        vars = tuple(vars)
        return {v: cls.var(v, vars, ring) for v in vars}

    def zero(self) -> "MultiPoly":
        return MultiPoly._raw(self.vars, {}, self.ring)

    def one(self) -> "MultiPoly":
        return MultiPoly.constant(self.ring.one, self.vars, self.ring)

    # -- basic protocol -----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        """Coefficient of the constant monomial."""
        return self.terms.get((0,) * len(self.vars), self.ring.zero)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading_term(self):
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def _check(self, other: "MultiPoly"):
        if other.vars != self.vars:
            raise ValueError(f"variable sets differ: {self.vars} vs {other.vars}")
        if other.ring != self.ring:
            raise ValueError(f"rings differ: {self.ring} vs {other.ring}")

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(other, self.vars, self.ring)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        try:
            return self.terms == self._lift(other).terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.vars, out, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.vars, {e: -c for e, c in self.terms.items()}, self.ring)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MultiPoly":
        c = self.ring(c)
        if not c:
            return self.zero()
        return MultiPoly._raw(self.vars, {e: v * c for e, v in self.terms.items()}, self.ring)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for e1, c1 in b.items():
            for e2, c2 in a.items():
                e = tuple([x + y for x, y in zip(e1, e2)])
                v = get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        out = {e: c for e, c in out.items() if c}
        return MultiPoly._raw(self.vars, out, self.ring)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = self.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- variables and structure --------------------------------------------

    def index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}; have {self.vars}") from None

    def degree(self, name: str) -> int:
        """Degree in one variable (-1 for the zero polynomial)."""
        i = self.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def coefficients_in(self, name: str) -> dict[int, "MultiPoly"]:
        """Split into {k: coefficient of name**k}; coefficients keep the same variables."""
        i = self.index(name)
        parts: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[i]
            parts.setdefault(k, {})[e[:i] + (0,) + e[i + 1:]] = c
        return {k: MultiPoly._raw(self.vars, t, self.ring) for k, t in parts.items()}

    def coefficient_of(self, name: str, k: int) -> "MultiPoly":
        i = self.index(name)
        out = {e[:i] + (0,) + e[i + 1:]: c for e, c in self.terms.items() if e[i] == k}
        return MultiPoly._raw(self.vars, out, self.ring)

    def with_vars(self, new_vars: Iterable[str]) -> "MultiPoly":
        """Re-express over another variable list; dropped variables must not occur."""
        new_vars = tuple(new_vars)
        pos = {v: j for j, v in enumerate(new_vars)}
        used = [i for i, v in enumerate(self.vars) if any(e[i] for e in self.terms)]
        for i in used:
            if self.vars[i] not in pos:
                raise ValueError(f"variable {self.vars[i]} occurs but is not in {new_vars}")
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(new_vars)
            for i in used:
                ne[pos[self.vars[i]]] = e[i]
            out[tuple(ne)] = c
        return MultiPoly._raw(new_vars, out, self.ring)

    def rename(self, mapping: Mapping[str, str]) -> "MultiPoly":
        new_vars = tuple(mapping.get(v, v) for v in self.vars)
        return MultiPoly(new_vars, self.terms, self.ring)

    def map_coeffs(self, f, ring) -> "MultiPoly":
        """Apply f to every coefficient, landing in ``ring``."""
        return MultiPoly(self.vars, {e: f(c) for e, c in self.terms.items()}, ring)

    def change_ring(self, ring) -> "MultiPoly":
        return MultiPoly(self.vars, self.terms, ring)

    def specialize(self, values: Mapping[str, object]) -> "MultiPoly":
        """Substitute ring scalars for some variables (exponents become 0)."""
        idx = [(self.index(v), self.ring(x)) for v, x in values.items()]
        out: dict = {}
        for e, c in self.terms.items():
            ne = list(e)
            for i, x in idx:
                if ne[i]:
                    c = c * x ** ne[i]
                    ne[i] = 0
                    if not c:
                        break
            if c:
                k = tuple(ne)
                s = out.get(k)
                out[k] = c if s is None else s + c
        return MultiPoly._raw(self.vars, {e: c for e, c in out.items() if c}, self.ring)

    def evaluate(self, values: Mapping[str, object]):
        """Full evaluation; every occurring variable must be given."""
        p = self.specialize(values)
        if not p.is_constant():
            raise ValueError("not all variables were assigned")
        return p.constant_value()

    def substitute(self, name: str, by: "MultiPoly") -> "MultiPoly":
        """Replace variable ``name`` by the polynomial ``by`` (same variables and ring)."""
        if name not in self.vars:
            return self
        self._check(by)
        parts = self.coefficients_in(name)
        result = self.zero()
        powers = {0: self.one()}
        for k in sorted(parts):
            if k not in powers:
                top = max(powers)
                p = powers[top]
                for j in range(top + 1, k + 1):
                    p = p * by
                    powers[j] = p
            result = result + parts[k] * powers[k]
        return result

    def substitute_many(self, mapping: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Simultaneous substitution of several variables."""
        out = self.zero()
        idx = {self.index(v): q for v, q in mapping.items()}
        cache: dict = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                cache[key] = idx[i] ** k
            return cache[key]

        for e, c in self.terms.items():
            rest = list(e)
            term = None
            for i in idx:
                if e[i]:
                    f = power(i, e[i])
                    term = f if term is None else term * f
                    rest[i] = 0
            mono = MultiPoly._raw(self.vars, {tuple(rest): c}, self.ring)
            out = out + (mono if term is None else mono * term)
        return out

    def diff(self, name: str) -> "MultiPoly":
        i = self.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                v = c * e[i]
                if v:
                    out[ne] = v
        return MultiPoly._raw(self.vars, out, self.ring)

    # -- gradings -----------------------------------------------------------

    def _grade_set(self, grade) -> set:
        return {grade(e) for e in self.terms}

    def total_degree(self, names: Iterable[str] | None = None) -> int:
        idx = range(len(self.vars)) if names is None else [self.index(v) for v in names]
        return max((sum(e[i] for i in idx) for e in self.terms), default=-1)

    def grading(self, mode: str, **kw):
        """Return (homogeneous, grade) under one of three gradings.

        ``mode="degree"`` takes ``vars``; ``mode="bidegree"`` takes ``first`` and
        ``second``; ``mode="weight"`` takes ``weights`` (a name -> int mapping).
        The grade is None for the zero polynomial or a non-homogeneous one.
        """
        if mode == "degree":
            idx = [self.index(v) for v in kw["vars"]]
            grades = self._grade_set(lambda e: sum(e[i] for i in idx))
        elif mode == "bidegree":
            i1 = [self.index(v) for v in kw["first"]]
            i2 = [self.index(v) for v in kw["second"]]
            grades = self._grade_set(lambda e: (sum(e[i] for i in i1), sum(e[i] for i in i2)))
        elif mode == "weight":
            w = [kw["weights"].get(v, 0) for v in self.vars]
            grades = self._grade_set(lambda e: sum(x * y for x, y in zip(e, w)))
        else:
            raise ValueError(f"unknown grading mode {mode!r}")
        if len(grades) == 1:
            return True, grades.pop()
        return (not grades), None

    # -- integer content and division ---------------------------------------

    def content_primitive(self) -> tuple[int, "MultiPoly"]:
        """Positive integer content and primitive part (ZZ coefficients only)."""
        if not self.terms:
            raise ValueError("content of the zero polynomial")
        g = 0
        for c in self.terms.values():
            g = gcd(g, int(c))
        prim = {e: c // g for e, c in self.terms.items()}
        return g, MultiPoly._raw(self.vars, prim, self.ring)

    def _div_coeff(self, a, b):
        if self.ring.is_field:
            return a / b
        if isinstance(a, int):
            q, r = divmod(a, b)
            return q if r == 0 else None
        if isinstance(a, CyclotomicInt) and isinstance(b, int):
            try:
                return a.exact_div_int(b)
            except ArithmeticError:
                return None
        raise TypeError(f"cannot divide coefficients in {self.ring}")

    def divmod(self, q: "MultiPoly") -> tuple["MultiPoly", "MultiPoly"]:
        """Multivariate division by a single divisor under graded-lex order."""
        self._check(q)
        if not q:
            raise ZeroDivisionError("division by the zero polynomial")
        lq, cq = q.leading_term()
        rest_q = [(e, c) for e, c in q.terms.items() if e != lq]
        work = dict(self.terms)
        heap = [(-sum(e), tuple(-x for x in e)) for e in work]
        heapq.heapify(heap)
        quot: dict = {}
        rem: dict = {}
        while heap:
            _, ne = heapq.heappop(heap)
            e = tuple(-x for x in ne)
            c = work.pop(e, None)
            if c is None or not c:
                continue
            shift = tuple(x - y for x, y in zip(e, lq))
            t = None
            if min(shift) >= 0:
                t = self._div_coeff(c, cq)
            if t is None:
                rem[e] = c
                continue
            quot[shift] = t
            for eq, c2 in rest_q:
                k = tuple(x + y for x, y in zip(eq, shift))
                old = work.get(k)
                if old is None:
                    work[k] = -t * c2
                    heapq.heappush(heap, (-sum(k), tuple(-x for x in k)))
                else:
                    work[k] = old - t * c2
        return (MultiPoly._raw(self.vars, quot, self.ring),
                MultiPoly._raw(self.vars, {e: c for e, c in rem.items() if c}, self.ring))

    def exact_divide(self, q: "MultiPoly") -> "MultiPoly":
        quot, rem = self.divmod(q)
        if rem:
            raise NotDivisible(f"nonzero remainder with {len(rem)} terms", rem)
        return quot

    # -- display and serialization ------------------------------------------

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            cs = str(c)
            if not mono:
                out.append(cs)
            elif c == 1:
                out.append(mono)
            elif c == -1:
                out.append("-" + mono)
            else:
                out.append(f"({cs})*{mono}" if isinstance(c, CyclotomicInt) else f"{cs}*{mono}")
        return " + ".join(out).replace("+ -", "- ")

    def to_json(self) -> dict:
        terms = []
        for e, c in self.sorted_terms():
            if isinstance(c, CyclotomicInt):
                coeff = [str(x) for x in c.coeffs]
            elif isinstance(c, PrimeFieldElem):
                coeff = str(c.value)
            else:
                coeff = str(c)
            terms.append({"exps": list(e), "coeff": coeff})
        return {"vars": list(self.vars), "ring": self.ring.name, "terms": terms}

    @classmethod
    def from_json(cls, obj: Mapping) -> "MultiPoly":
        ring = ring_from_name(obj.get("ring", "ZZ"))
        terms = {}
        for t in obj["terms"]:
            c = t["coeff"]
            c = ring([int(x) for x in c]) if isinstance(c, list) else ring(Fraction(c) if ring is QQ else _parse_scalar(c))
            terms[tuple(t["exps"])] = c
        return cls(obj["vars"], terms, ring)


def _parse_scalar(s: str):
    f = Fraction(s)
    return f.numerator if f.denominator == 1 else f


def ring_from_name(name: str):
    if name == "ZZ":
        return ZZ
    if name == "QQ":
        return QQ
    if name.startswith("Fp:"):
        return GF(int(name[3:]))
    if name.startswith("ZZ[zeta_"):
        return CyclotomicRing(int(name[len("ZZ[zeta_"):-1]))
    raise ValueError(f"unknown ring {name!r}")


def canonical_weights(d: int, m: int, x: str = "z") -> dict[str, int]:
    """wt(z) = m (or wt(w) = 1 when x == 'w') and wt(a_i) = wt(b_i) = i."""
    w = {x: m if x == "z" else 1}
    for i in range(d + 1):
        w[f"a{i}"] = i
        w[f"b{i}"] = i
    return w
