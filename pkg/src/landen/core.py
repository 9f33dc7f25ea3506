"""Generalized Landen transforms F_{m,k} and the induced maps on P^{2d+1}.

The universal pair (G, H) is built by averaging over twists by powers of a
primitive m-th root of unity inside ZZ[zeta_m][a, b, w], then collapsing
w**m to z and descending the coefficients to ZZ.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .exactrings import (
    QQ,
    ZZ,
    CyclotomicRing,
    PrimeFieldElem,
    descend_to_integer,
    is_prime,
    zeta_pow,
)
from .multipoly import MultiPoly, a_vars, b_vars, canonical_weights, landen_vars
from .ratfunc import LaurentPrefix, ProjPoint, RatFunc, normalize_proj


class CharDividesM(ValueError):
    """The field characteristic divides m, so 1/m does not exist."""


class IndeterminatePoint(ValueError):
    """The point lies in the indeterminacy locus {b = 0}."""


class CostGuardExceeded(ValueError):
    pass


class InvariantViolation(RuntimeError):
    """An identity that must hold by construction failed: an implementation bug."""


@dataclass
class Report:
    """Outcome of a verification; truthy iff there were no failures."""

    identity: str
    grid: dict = field(default_factory=dict)
    mode: str = "symbolic"
    trials: int = 0
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return not self.failures

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "grid": self.grid,
            "mode": self.mode,
            "trials": self.trials,
            "failures": self.failures,
        }
        if self.details:
            out["details"] = self.details
        return out


# ---------------------------------------------------------------------------
# the universal pair
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class LandenPair:
    d: int
    m: int
    k: int
    G: MultiPoly  # over (z, a_0..a_d, b_0..b_d)
    H: MultiPoly  # over (z, b_0..b_d)

    def __eq__(self, other):
        if not isinstance(other, LandenPair):
            return NotImplemented
        return (self.d, self.m, self.k) == (other.d, other.m, other.k) and \
            self.G == other.G and self.H == other.H

    def G_coeffs(self) -> list[MultiPoly]:
        """[G_{m,k,0}, ..., G_{m,k,d}] in a, b (G_{m,k,i} multiplies z^{d-i})."""
        ab = a_vars(self.d) + b_vars(self.d)
        return [self.G.coefficient_of("z", self.d - i).with_vars(ab) for i in range(self.d + 1)]

    def H_coeffs(self) -> list[MultiPoly]:
        """[H_{m,0}, ..., H_{m,d}] in b."""
        return [self.H.coefficient_of("z", self.d - i).with_vars(b_vars(self.d))
                for i in range(self.d + 1)]

    def coordinates(self) -> list[MultiPoly]:
        """The 2d+2 coordinate forms of the projective map, all over (a, b)."""
        ab = a_vars(self.d) + b_vars(self.d)
        return self.G_coeffs() + [h.with_vars(ab) for h in self.H_coeffs()]

    def H_full(self) -> MultiPoly:
        return self.H.with_vars(landen_vars(self.d))

    def to_json(self) -> dict:
        return {"d": self.d, "m": self.m, "k": self.k,
                "G": self.G.to_json(), "H": self.H.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "LandenPair":
        return cls(obj["d"], obj["m"], obj["k"],
                   MultiPoly.from_json(obj["G"]), MultiPoly.from_json(obj["H"]))

    def to_text(self) -> str:
        return f"G = {_zpoly_text(self.G_coeffs(), self.d)}\nH = {_zpoly_text(self.H_coeffs(), self.d)}\n"

    def to_latex(self) -> str:
        num = _zpoly_latex(self.G_coeffs(), self.d)
        den = _zpoly_latex(self.H_coeffs(), self.d)
        return f"\\mathfrak{{F}}_{{{self.m},{self.k}}}(\\varphi)(z) = \\frac{{{num}}}{{{den}}}"


def _zpoly_text(coeffs, d):
    parts = []
    for i, c in enumerate(coeffs):
        if c:
            e = d - i
            zs = "" if e == 0 else ("*z" if e == 1 else f"*z^{e}")
            parts.append(f"({c}){zs}")
    return " + ".join(parts) if parts else "0"


def _latex_key(vars):
    # a-index ascending, then b exponents lexicographically with b_d most significant
    a_idx = [i for i, v in enumerate(vars) if v.startswith("a")]
    b_idx = [i for i, v in enumerate(vars) if v.startswith("b")][::-1]

    def key(item):
        e, _ = item
        a_pos = next((int(vars[i][1:]) for i in a_idx if e[i]), -1)
        return (a_pos, tuple(-e[i] for i in b_idx))

    return key


def _mono_latex(vars, e):
    b = [(v, x) for v, x in zip(vars, e) if x and v.startswith("b")]
    a = [(v, x) for v, x in zip(vars, e) if x and v.startswith("a")]
    out = []
    for v, x in sorted(b, key=lambda t: -int(t[0][1:])) + a:
        s = f"{v[0]}_{v[1:]}"
        out.append(s if x == 1 else f"{s}^{x}")
    return " ".join(out)


def poly_latex(p: MultiPoly) -> str:
    if not p:
        return "0"
    s = ""
    for e, c in sorted(p.terms.items(), key=_latex_key(p.vars)):
        mono = _mono_latex(p.vars, e)
        mag = abs(c)
        body = mono if (mag == 1 and mono) else (f"{mag} {mono}".strip())
        if not s:
            s = ("-" if c < 0 else "") + body
        else:
            s += (" - " if c < 0 else " + ") + body
    return s


def _zpoly_latex(coeffs, d):
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        e = d - i
        inner = poly_latex(c)
        zs = "" if e == 0 else ("z" if e == 1 else f"z^{e}")
        if zs and len(c) > 1:
            parts.append(f"({inner}) {zs}")
        elif zs:
            parts.append(f"{inner} {zs}")
        else:
            parts.append(inner)
    if not parts:
        return "0"
    s = parts[0]
    for p in parts[1:]:
        s += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
    return s


def _check_dmk(d, m, k):
    if d < 1 or m < 1:
        raise ValueError(f"need d >= 1 and m >= 1, got d={d}, m={m}")
    if not 0 <= k < m:
        raise ValueError(f"need 0 <= k < m, got k={k}, m={m}")


def _twist(p: MultiPoly, zeta_exp: int, t: int, m: int) -> MultiPoly:
    """p(zeta^t w) for p over (w, ...), with zeta = zeta_m**zeta_exp."""
    out = {}
    for e, c in p.terms.items():
        s = (zeta_exp * t * e[0]) % m
        out[e] = c * zeta_pow(m, s) if s else c
    return MultiPoly._raw(p.vars, out, p.ring)


@functools.lru_cache(maxsize=None)
def generic_gh(d: int, m: int, k: int, zeta_exp: int = 1) -> LandenPair:
    """The universal numerator and denominator of F_{m,k} on degree-d maps.

    ``zeta_exp`` selects the primitive root zeta_m**zeta_exp used in the
    averaging; the result does not depend on it.
    """
    _check_dmk(d, m, k)
    if gcd(zeta_exp, m) != 1:
        raise ValueError(f"zeta_m^{zeta_exp} is not primitive")
    R = CyclotomicRing(m)
    W = landen_vars(d, "w")
    g = MultiPoly.gens(W, R)
    Fa = sum((g[f"a{i}"] * g["w"] ** (d - i) for i in range(d + 1)), MultiPoly(W, ring=R))
    Fb = sum((g[f"b{i}"] * g["w"] ** (d - i) for i in range(d + 1)), MultiPoly(W, ring=R))

    # prod_{s != t} F_b(zeta^s w) = Q(zeta^t w) with Q = prod_{s=1}^{m-1} F_b(zeta^s w)
    Q = MultiPoly.constant(1, W, R)
    for s in range(1, m):
        Q = Q * _twist(Fb, zeta_exp, s, m)
    FaQ = Fa * Q
    S = MultiPoly(W, ring=R)
    for t in range(m):
        S = S + _twist(FaQ, zeta_exp, t, m) * zeta_pow(m, -zeta_exp * k * t)
    h = Fb * Q

    Gz = _collapse(S, m, k, divide_by=m, out_vars=landen_vars(d))
    Hz = _collapse(h, m, 0, divide_by=1, out_vars=("z",) + b_vars(d))
    return LandenPair(d, m, k, Gz, Hz)


def _collapse(p: MultiPoly, m: int, k: int, divide_by: int, out_vars) -> MultiPoly:
    """Divide by divide_by * w**k, replace w**m by z and descend coefficients to ZZ.

    Variables of ``p`` missing from ``out_vars`` must not occur.
    """
    keep = [p.vars.index(v) for v in out_vars[1:]]
    dropped = [i for i in range(1, len(p.vars)) if i not in keep]
    out = {}
    for e, c in p.terms.items():
        we = e[0]
        if we % m != k % m:
            raise InvariantViolation(f"w-exponent {we} is not congruent to {k} mod {m}")
        if any(e[i] for i in dropped):
            raise InvariantViolation("unexpected variable in the collapsed polynomial")
        try:
            n = descend_to_integer(c.exact_div_int(divide_by) if divide_by != 1 else c)
        except ArithmeticError as exc:
            raise InvariantViolation(f"coefficient {c!r} failed to descend: {exc}") from exc
        out[((we - k) // m,) + tuple(e[i] for i in keep)] = n
    return MultiPoly(out_vars, out, ZZ)


# ---------------------------------------------------------------------------
# leading forms
# ---------------------------------------------------------------------------


def _mono(vars, ring=ZZ, coeff=1, **exps) -> MultiPoly:
    e = [0] * len(vars)
    for v, x in exps.items():
        e[vars.index(v)] += x
    return MultiPoly(vars, {tuple(e): coeff}, ring)


def leading_form_check(pair: LandenPair) -> Report:
    d, m, k = pair.d, pair.m, pair.k
    V = landen_vars(d)
    sign = (-1) ** ((m + 1) * d)
    rep = Report("leading-form", {"d": d, "m": m, "k": k})
    top_G = pair.G.coefficient_of("z", d)
    top_H = pair.H.coefficient_of("z", d).with_vars(V)
    want_G = _mono(V, coeff=sign, a0=1, b0=m - 1) if k == 0 else MultiPoly(V)
    if top_G != want_G:
        rep.failures.append(f"z^{d} coefficient of G is {top_G}, expected {want_G}")
    if top_H != _mono(V, coeff=sign, b0=m):
        rep.failures.append(f"z^{d} coefficient of H is {top_H}")
    if pair.H.degree("z") != d:
        rep.failures.append("deg_z H != d")
    degG = pair.G.degree("z")
    if (k == 0 and degG != d) or (k > 0 and degG >= d):
        rep.failures.append(f"deg_z G = {degG}")
    # two further monomials of the z^{d-1} coefficient of G
    sub = pair.G.coefficient_of("z", d - 1)
    if m - k <= d:
        e = _mono(V, **{f"a{m - k}": 1, "b0": m - 1}).leading_term()[0]
        got = sub.terms.get(e, 0)
        rep.details[f"a{m - k}*b0^{m - 1}"] = got
        if got != sign:
            rep.failures.append(f"coefficient of a{m - k} b0^{m - 1} z^{d - 1} is {got}, expected {sign}")
    if m >= 2 and m - k - 1 <= d:
        e = _mono(V, **{f"a{m - k - 1}": 1, "b0": m - 2, "b1": 1}).leading_term()[0]
        got = sub.terms.get(e, 0)
        rep.details[f"a{m - k - 1}*b0^{m - 2}*b1"] = got
        if got != -sign:
            rep.failures.append(f"coefficient of a{m - k - 1} b0^{m - 2} b1 z^{d - 1} is {got}, expected {-sign}")
    return rep


# ---------------------------------------------------------------------------
# concrete transforms
# ---------------------------------------------------------------------------


def eval_poly(p: MultiPoly, values: dict, zero):
    """Evaluate an integer polynomial at field elements (no coercion into p.ring)."""
    idx = [(i, values[v]) for i, v in enumerate(p.vars) if v in values]
    total = zero
    for e, c in p.terms.items():
        t = zero + c
        for i, x in idx:
            if e[i]:
                t = t * x ** e[i]
        total = total + t
    return total


def _coeff_values(phi: RatFunc) -> dict:
    vals = {f"a{i}": c for i, c in enumerate(phi.num)}
    vals.update({f"b{i}": c for i, c in enumerate(phi.den)})
    return vals


def specialize_pair(pair: LandenPair, phi: RatFunc) -> tuple[list, list]:
    """Descending z-coefficient lists of G and H at phi's coefficients."""
    vals = _coeff_values(phi)
    zero = phi.field(0)
    return ([eval_poly(g, vals, zero) for g in pair.G_coeffs()],
            [eval_poly(h, vals, zero) for h in pair.H_coeffs()])


@dataclass
class TransformResult:
    value: RatFunc          # reduced G/H
    raw: RatFunc            # G/H before removing common factors, formal degree d
    degree_preserved: bool  # Res(G, H) != 0 at formal degree d


def _check_char(field, m):
    p = getattr(field, "characteristic", 0)
    if p and m % p == 0:
        raise CharDividesM(f"characteristic {p} divides m = {m}")


def transform_detailed(phi: RatFunc, m: int, k: int) -> TransformResult:
    from .elimination import resultant_coeffs

    _check_char(phi.field, m)
    pair = generic_gh(max(phi.d, 1), m, k)
    if phi.d == 0:
        phi = RatFunc(list(phi.num), list(phi.den), 1, phi.field)
    Gc, Hc = specialize_pair(pair, phi)
    raw = RatFunc(Gc, Hc, phi.d, phi.field)
    res = resultant_coeffs(Gc, Hc)
    return TransformResult(raw.reduced(), raw, bool(res))


def transform(phi: RatFunc, m: int, k: int) -> RatFunc:
    """F_{m,k}(phi), with common factors of numerator and denominator removed."""
    return transform_detailed(phi, m, k).value


def laurent_transform_oracle(s: LaurentPrefix, m: int, k: int) -> LaurentPrefix:
    """Coefficient extraction: the output coefficient of z^j is the input one of z^(mj+k).

    The output covers every j with m*j + k inside the known input window,
    i.e. j from ceil((start - k)/m) to floor((end - 1 - k)/m).
    """
    j0 = -((k - s.start) // m)  # ceil((start - k) / m)
    j1 = (s.end - 1 - k) // m
    coeffs = tuple(s.coeff(m * j + k) for j in range(j0, j1 + 1))
    return LaurentPrefix(j0, coeffs)


# ---------------------------------------------------------------------------
# the projective map
# ---------------------------------------------------------------------------


def projective_map(P: Sequence, d: int, m: int, k: int) -> ProjPoint:
    coords = list(P.coords if isinstance(P, ProjPoint) else P)
    if len(coords) != 2 * d + 2:
        raise ValueError(f"expected {2 * d + 2} coordinates, got {len(coords)}")
    if not any(coords[d + 1:]):
        raise IndeterminatePoint("b = 0 lies in the indeterminacy locus")
    vals = {f"a{i}": c for i, c in enumerate(coords[:d + 1])}
    vals.update({f"b{i}": c for i, c in enumerate(coords[d + 1:])})
    zero = coords[0] - coords[0]
    image = [eval_poly(c, vals, zero) for c in generic_gh(d, m, k).coordinates()]
    if not any(image[d + 1:]):
        raise InvariantViolation("image has zero b-part")
    return normalize_proj(image)


# ---------------------------------------------------------------------------
# random inputs
# ---------------------------------------------------------------------------


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(f"{seed}:{trial}")


def random_rational(rng: random.Random, bound: int = 9, den_bound: int = 5) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den_bound))


def random_ratfunc(rng: random.Random, d: int, field=QQ) -> RatFunc:
    """A random degree-d function with b_0 != 0 and nonzero constant term of the denominator."""
    num = [random_rational(rng) for _ in range(d + 1)]
    den = [random_rational(rng) for _ in range(d + 1)]
    while not den[0]:
        den[0] = random_rational(rng)
    while not den[-1]:
        den[-1] = random_rational(rng)
    if field != QQ:
        num = [field(x) for x in num]
        den = [field(x) for x in den]
    return RatFunc(num, den, d, field)


# ---------------------------------------------------------------------------
# composition and the monoid
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MonoidElem:
    """The matrix (m 0; k 1), standing for F_{m,k}."""

    m: int
    k: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be at least 1")

    def __mul__(self, other: "MonoidElem") -> "MonoidElem":
        return monoid_elem_mul(self, other)

    def __pow__(self, r: int) -> "MonoidElem":
        out = MonoidElem(1, 0)
        for _ in range(r):
            out = out * self
        return out

    def matrix(self) -> tuple:
        return ((self.m, 0), (self.k, 1))


def monoid_elem_mul(x: MonoidElem, y: MonoidElem) -> MonoidElem:
    (a, b), (c, e) = x.matrix()
    (f, g), (h, i) = y.matrix()
    prod = ((a * f + b * h, a * g + b * i), (c * f + e * h, c * g + e * i))
    assert prod[0][1] == 0 and prod[1][1] == 1
    return MonoidElem(prod[0][0], prod[1][0])


def power_on_monomial(m: int, k: int, e: int) -> tuple[int, int] | None:
    """F_{m,k}(z^e) as (coefficient, exponent), or None for the zero function."""
    if (e - k) % m:
        return None
    return 1, (e - k) // m


def _proj_equal(P: list[MultiPoly], T: list[MultiPoly]) -> bool:
    """Coordinate tuples equal up to a common nonzero factor (cross-multiplication)."""
    r = next((i for i, t in enumerate(T) if t), None)
    if r is None or not P[r]:
        return False
    return all(P[i] * T[r] == P[r] * T[i] for i in range(len(T)))


def compose_check(d: int, m: int, k: int, n: int, l: int, mode: str = "sampled",
                  trials: int = 50, seed: int = 0) -> Report:
    """F_{m,k} o F_{n,l} == F_{mn, kn+l}."""
    _check_dmk(d, m, k)
    _check_dmk(d, n, l)
    M, K = m * n, k * n + l
    rep = Report("composition", {"d": d, "m": m, "k": k, "n": n, "l": l}, mode)
    if mode == "symbolic":
        if d > 2 or M > 6:
            raise CostGuardExceeded("symbolic composition limited to d <= 2, mn <= 6")
        inner = generic_gh(d, n, l).coordinates()
        outer = generic_gh(d, m, k).coordinates()
        names = a_vars(d) + b_vars(d)
        sub = dict(zip(names, inner))
        composed = [c.substitute_many(sub) for c in outer]
        target = generic_gh(d, M, K).coordinates()
        if not _proj_equal(composed, target):
            rep.failures.append("composed coordinates differ from the target map")
        return rep
    rep.trials = trials
    for t in range(trials):
        rng = trial_rng(seed, t)
        phi = random_ratfunc(rng, rng.randint(1, d))
        lhs = transform(transform(phi, n, l), m, k)
        rhs = transform(phi, M, K)
        if lhs != rhs:
            rep.failures.append({"seed": seed, "trial": t, "phi": phi.to_json()})
    return rep


# ---------------------------------------------------------------------------
# structural checks
# ---------------------------------------------------------------------------


def zeta_independence_check(d: int, m: int, k: int) -> Report:
    base = generic_gh(d, m, k, 1)
    rep = Report("zeta-independence", {"d": d, "m": m, "k": k})
    roots = [j for j in range(1, m) if gcd(j, m) == 1] or [1]
    rep.details["roots"] = roots
    for j in roots:
        if generic_gh(d, m, k, j) != base:
            rep.failures.append(f"zeta_{m}^{j} gives a different pair")
    return rep


def frobenius_form_check(d: int, p: int) -> Report:
    """Mod p the denominator coordinates of the degree-p map are b_i**p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    rep = Report("frobenius", {"d": d, "p": p})
    B = b_vars(d)
    for i, h in enumerate(generic_gh(d, p, 0).H_coeffs()):
        diff = h - _mono(B, **{f"b{i}": p})
        if any(c % p for c in diff.terms.values()):
            rep.failures.append(f"H_{{{p},{i}}} = {h} is not b{i}^{p} mod {p}")
    return rep


def _iota_coords(coords, d_small):
    a, b = list(coords[:d_small + 1]), list(coords[d_small + 1:])
    zero = coords[0] - coords[0]
    return [zero] + a + [zero] + b


def embedding_compat_check(d: int, m: int, k: int, mode: str = "symbolic",
                           trials: int = 50, seed: int = 0) -> Report:
    """R_{d,m,k} o iota == iota o R_{d-1,m,k} with iota padding a_0 = b_0 = 0."""
    if d < 2:
        raise ValueError("embedding needs d >= 2")
    rep = Report("embedding", {"d": d, "m": m, "k": k}, mode)
    if mode == "symbolic":
        big = generic_gh(d, m, k).coordinates()
        small = generic_gh(d - 1, m, k).coordinates()
        small_names = a_vars(d - 1) + b_vars(d - 1)
        rename = {f"a{i + 1}": f"a{i}" for i in range(d)}
        rename.update({f"b{i + 1}": f"b{i}" for i in range(d)})
        pulled = []
        for c in big:
            c = c.specialize({"a0": 0, "b0": 0})
            c = c.with_vars([v for v in c.vars if v not in ("a0", "b0")])
            pulled.append(c.rename(rename).with_vars(small_names))
        zero = MultiPoly(small_names)
        pushed = [zero] + small[:d] + [zero] + small[d:]
        if not _proj_equal(pulled, pushed):
            rep.failures.append("coordinate forms differ")
        return rep
    rep.trials = trials
    for t in range(trials):
        rng = trial_rng(seed, t)
        P = [random_rational(rng) for _ in range(2 * d)]
        while not any(P[d:]):
            P[-1] = random_rational(rng)
        lhs = projective_map(_iota_coords(P, d - 1), d, m, k)
        rhs = normalize_proj(_iota_coords(list(projective_map(P, d - 1, m, k)), d - 1))
        if lhs != rhs:
            rep.failures.append({"seed": seed, "trial": t, "point": [str(x) for x in P]})
    return rep


def _subspaces(d: int) -> dict[str, list[int]]:
    """Coordinate index sets (into [a_0..a_d, b_0..b_d]) that are set to zero."""
    out = {}
    for i in range(d + 1):
        out[f"U{i}"] = list(range(i + 1))
        out[f"V{i}"] = [d - j for j in range(i + 1)]
    for i in range(d):
        out[f"W{i}"] = [2 * d + 1 - j for j in range(i + 1)]
    return out


def invariant_subspace_check(d: int, m: int, k: int, trials: int = 20, seed: int = 0) -> Report:
    """Test which coordinate subspaces the affine map (b_0 = 1) sends into themselves.

    Subspaces that are not invariant are listed in ``details["not_invariant"]``
    together with a witness; ``failures`` is reserved for the image statement
    (for 1 <= k < m every image point has a_0 = 0).
    """
    rep = Report("subspaces", {"d": d, "m": m, "k": k}, "sampled", trials)
    invariant, broken = [], {}
    for name, zeros in _subspaces(d).items():
        ok = True
        for t in range(trials):
            rng = trial_rng(seed, t)
            P = [random_rational(rng) for _ in range(2 * d + 2)]
            P[d + 1] = Fraction(1)
            for i in zeros:
                P[i] = Fraction(0)
            img = _affine_image(P, d, m, k)
            if any(img[i] for i in zeros):
                ok = False
                broken[name] = {"trial": t, "point": [str(x) for x in P],
                                "image": [str(x) for x in img]}
                break
        (invariant.append(name) if ok else None)
    rep.details["invariant"] = invariant
    rep.details["not_invariant"] = broken
    if k >= 1:
        for t in range(trials):
            rng = trial_rng(seed, 10_000 + t)
            P = [random_rational(rng) for _ in range(2 * d + 2)]
            P[d + 1] = Fraction(1)
            if _affine_image(P, d, m, k)[0]:
                rep.failures.append({"trial": t, "reason": "image not in a_0 = 0"})
    return rep


def _affine_image(P, d, m, k):
    vals = {f"a{i}": c for i, c in enumerate(P[:d + 1])}
    vals.update({f"b{i}": c for i, c in enumerate(P[d + 1:])})
    img = [eval_poly(c, vals, Fraction(0)) for c in generic_gh(d, m, k).coordinates()]
    lead = img[d + 1]
    return [x / lead for x in img]


def laurent_relation_check(phi: RatFunc, m: int, k: int, N: int = 20) -> bool:
    """Laurent expansion of F_{m,k}(phi) agrees with coefficient extraction to order N."""
    from .ratfunc import laurent_expand

    out = laurent_expand(transform(phi, m, k), N)
    s0 = laurent_expand(phi, 1).start
    last = m * (out.start + N - 1) + k
    src = laurent_expand(phi, max(last - s0 + 1, 1))
    ref = laurent_transform_oracle(src, m, k)
    if min(out.end, ref.end) - out.start < N:
        raise InvariantViolation("oracle window shorter than the requested order")
    return out.agrees_with(ref)


def pair_grading_check(d: int, m: int, k: int) -> Report:
    """Bi-degree (1, m-1) of G coefficients, degree m of H coefficients, weights md-k and md."""
    pair = generic_gh(d, m, k)
    rep = Report("gradings", {"d": d, "m": m, "k": k})
    A, B = a_vars(d), b_vars(d)
    for i, g in enumerate(pair.G_coeffs()):
        if g:
            ok, grade = g.grading("bidegree", first=A, second=B)
            if not ok or grade != (1, m - 1):
                rep.failures.append({"coeff": f"G_{i}", "bidegree": grade})
    for i, h in enumerate(pair.H_coeffs()):
        ok, grade = h.grading("degree", vars=B)
        if not ok or grade != m:
            rep.failures.append({"coeff": f"H_{i}", "degree": grade})
    w = canonical_weights(d, m)
    for name, p, want in (("G", pair.G, m * d - k), ("H", pair.H, m * d)):
        ok, grade = p.grading("weight", weights=w)
        if not ok or grade != want:
            rep.failures.append({"poly": name, "weight": grade, "expected": want})
    return rep


def indeterminacy_check(d: int, m: int, k: int, samples: int = 1000, seed: int = 0) -> Report:
    """All coordinates vanish on b = 0; the b-part of the image is nonzero whenever b is.

    For m = 1 the map is the identity and has no indeterminacy at all; that
    is checked instead of the vanishing on b = 0.
    """
    rep = Report("indeterminacy", {"d": d, "m": m, "k": k}, "sampled", samples)
    coords = generic_gh(d, m, k).coordinates()
    zero_b = {v: 0 for v in b_vars(d)}
    if m == 1:
        ab = a_vars(d) + b_vars(d)
        rep.details["locus"] = "empty"
        if coords != [MultiPoly.var(v, ab) for v in ab]:
            rep.failures.append("m = 1 map is not the identity")
    elif any(c.specialize(zero_b) for c in coords):
        rep.failures.append("a coordinate survives b = 0")
    common = None
    for c in coords:
        for e in c.terms:
            common = list(e) if common is None else [min(x, y) for x, y in zip(common, e)]
    if common and any(common):
        rep.failures.append({"common_monomial_factor": common})
    for t in range(samples):
        rng = trial_rng(seed, t)
        P = [random_rational(rng) for _ in range(2 * d + 2)]
        if not any(P[d + 1:]):
            P[2 * d + 1] = Fraction(1)
        vals = {f"a{i}": c for i, c in enumerate(P[:d + 1])}
        vals.update({f"b{i}": c for i, c in enumerate(P[d + 1:])})
        if not any(eval_poly(c, vals, Fraction(0)) for c in coords[d + 1:]):
            rep.failures.append({"trial": t, "point": [str(x) for x in P]})
    return rep
