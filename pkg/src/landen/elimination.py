"""Sylvester resultants, discriminants and the resultant/discriminant laws.

Resultants are always taken at explicitly stated formal degrees: a
polynomial of formal degree d whose leading coefficients vanish is still
placed in a Sylvester matrix of the full size.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import (
    CostGuardExceeded,
    InvariantViolation,
    Report,
    _check_char,
    eval_poly,
    generic_gh,
    random_rational,
    specialize_pair,
    trial_rng,
    transform_detailed,
)
from .multipoly import MultiPoly, NotDivisible, b_vars, landen_vars
from .ratfunc import RatFunc, poly_mul, trim


@dataclass(frozen=True)
class ResultantConvention:
    deg_f: int
    deg_g: int


# ---------------------------------------------------------------------------
# determinants
# ---------------------------------------------------------------------------


def det_field(M: Sequence[Sequence]):
    """Determinant of a square matrix over a field by Gaussian elimination.

    Plain ints are promoted to Fraction so the division stays exact.
    """
    n = len(M)
    if n == 0:
        return 1
    A = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in M]
    det = None
    sign = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            return A[0][0] - A[0][0]
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            sign = -sign
        p = A[c][c]
        det = p if det is None else det * p
        for r in range(c + 1, n):
            if A[r][c]:
                f = A[r][c] / p
                for j in range(c, n):
                    A[r][j] = A[r][j] - f * A[c][j]
    return det if sign == 1 else -det


def det_bareiss(M: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Fraction-free determinant over a polynomial ring (exact divisions only)."""
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix")
    A = [list(r) for r in M]
    one = A[0][0].one()
    prev = one
    sign = 1
    for c in range(n - 1):
        if not A[c][c]:
            piv = next((r for r in range(c + 1, n) if A[r][c]), None)
            if piv is None:
                return A[0][0].zero()
            A[c], A[piv] = A[piv], A[c]
            sign = -sign
        p = A[c][c]
        for r in range(c + 1, n):
            for j in range(c + 1, n):
                num = A[r][j] * p - A[r][c] * A[c][j]
                A[r][j] = num if prev == one else num.exact_divide(prev)
            A[r][c] = p.zero()
        prev = p
    return A[n - 1][n - 1] if sign == 1 else -A[n - 1][n - 1]


def det_laplace(M: Sequence[Sequence]):
    """Cofactor expansion along the first row; for small matrices only."""
    n = len(M)
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    total = None
    for j in range(n):
        if not M[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        t = M[0][j] * det_laplace(minor)
        t = t if j % 2 == 0 else -t
        total = t if total is None else total + t
    if total is None:
        return M[0][0] - M[0][0]
    return total


def det_poly(M: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    return det_laplace(M) if len(M) <= 4 else det_bareiss(M)


# ---------------------------------------------------------------------------
# resultants and discriminants
# ---------------------------------------------------------------------------


def sylvester_matrix(fc: Sequence, gc: Sequence, zero) -> list[list]:
    """Sylvester matrix of descending coefficient lists (lengths deg+1)."""
    n, m = len(fc) - 1, len(gc) - 1
    size = n + m
    rows = []
    for i in range(m):
        rows.append([zero] * i + list(fc) + [zero] * (size - n - 1 - i))
    for i in range(n):
        rows.append([zero] * i + list(gc) + [zero] * (size - m - 1 - i))
    return rows


def resultant_coeffs(fc: Sequence, gc: Sequence):
    """Resultant of two descending coefficient lists over a field, at their formal degrees."""
    if len(fc) == 1 and len(gc) == 1:
        return fc[0] - fc[0] + 1
    zero = (list(fc) + list(gc))[0] * 0
    return det_field(sylvester_matrix(fc, gc, zero))


def _descending(f: MultiPoly, var: str, deg: int) -> list[MultiPoly]:
    if f.degree(var) > deg:
        raise ValueError(f"polynomial has {var}-degree {f.degree(var)} > formal degree {deg}")
    return [f.coefficient_of(var, deg - i) for i in range(deg + 1)]


def sylvester_resultant(f: MultiPoly, g: MultiPoly, conv: ResultantConvention, var: str = "z") -> MultiPoly:
    """Res(f, g) in var at the formal degrees of ``conv``, as a polynomial in the other variables."""
    fc = _descending(f, var, conv.deg_f)
    gc = _descending(g, var, conv.deg_g)
    if conv.deg_f + conv.deg_g == 0:
        return f.one()
    return det_poly(sylvester_matrix(fc, gc, f.zero()))


def discriminant(f: MultiPoly, n: int, var: str = "z") -> MultiPoly:
    """Disc(f) from Res(f, f') = (-1)^((n^2-n)/2) * lead(f) * Disc(f) at formal degree n."""
    if n < 1:
        raise ValueError("discriminant needs formal degree >= 1")
    lead = f.coefficient_of(var, n)
    if not lead:
        raise NotDivisible("leading coefficient vanishes at the formal degree")
    r = sylvester_resultant(f, f.diff(var), ResultantConvention(n, n - 1), var)
    sign = -1 if ((n * n - n) // 2) % 2 else 1
    return r.exact_divide(lead) * sign


@functools.lru_cache(maxsize=None)
def disc_ratio(d: int, m: int) -> MultiPoly:
    """Disc(H_{b,m}) / Disc(F_b) in ZZ[b_0..b_d], both at formal degree d."""
    zb = ("z",) + b_vars(d)
    H = generic_gh(d, m, 0).H
    g = MultiPoly.gens(zb)
    Fb = sum((g[f"b{i}"] * g["z"] ** (d - i) for i in range(d + 1)), MultiPoly(zb))
    num = discriminant(H, d)
    den = discriminant(Fb, d)
    try:
        q = num.exact_divide(den)
    except NotDivisible as exc:
        raise InvariantViolation(f"Disc(F_b) does not divide Disc(H_b,{m}) for d={d}") from exc
    return q.with_vars(b_vars(d))


def _Fa_Fb(d: int) -> tuple[MultiPoly, MultiPoly]:
    V = landen_vars(d)
    g = MultiPoly.gens(V)
    Fa = sum((g[f"a{i}"] * g["z"] ** (d - i) for i in range(d + 1)), MultiPoly(V))
    Fb = sum((g[f"b{i}"] * g["z"] ** (d - i) for i in range(d + 1)), MultiPoly(V))
    return Fa, Fb


def resultant_sign(d: int, m: int, k: int) -> int:
    return -1 if (d * (m - k + 1)) % 2 else 1


def b0_exponent(m: int, k: int, corrected: bool = False) -> int:
    """Power of b_0 in the identity: m-1 as usually stated, m-1+k when corrected.

    At formal degree d the stated form is short by exactly b_0^k whenever k >= 1.
    """
    return m - 1 + k if corrected else m - 1


def resultant_identity_rhs(d: int, m: int, k: int, corrected: bool = False) -> MultiPoly:
    """(-1)^{d(m-k+1)} b_0^e b_d^{m-1-k} Res(F_a, F_b) Disc(H)/Disc(F) in ZZ[a, b]."""
    V = landen_vars(d)
    g = MultiPoly.gens(V)
    Fa, Fb = _Fa_Fb(d)
    res_ab = sylvester_resultant(Fa, Fb, ResultantConvention(d, d))
    ratio = disc_ratio(d, m).with_vars(V)
    return (g["b0"] ** b0_exponent(m, k, corrected)) * (g[f"b{d}"] ** (m - 1 - k)) * res_ab * ratio * resultant_sign(d, m, k)


def resultant_GH(d: int, m: int, k: int) -> MultiPoly:
    pair = generic_gh(d, m, k)
    return sylvester_resultant(pair.G, pair.H_full(), ResultantConvention(d, d))


def _rhs_at(d, m, k, a, b, corrected=False):
    ratio = eval_poly(disc_ratio(d, m), {f"b{i}": x for i, x in enumerate(b)}, Fraction(0))
    return (resultant_sign(d, m, k) * b[0] ** b0_exponent(m, k, corrected) * b[d] ** (m - 1 - k)
            * resultant_coeffs(a, b) * ratio)


def _lhs_at(d, m, k, a, b):
    phi = RatFunc(a, b, d)
    Gc, Hc = specialize_pair(generic_gh(d, m, k), phi)
    return resultant_coeffs(Gc, Hc)


def verify_resultant_identity(d: int, m: int, k: int, mode: str = "symbolic",
                              trials: int = 100, seed: int = 0, corrected: bool = False) -> Report:
    """Res(G, H) against the resultant/discriminant product formula.

    With ``corrected=False`` the b_0 exponent is m-1, which fails for k >= 1;
    failures then carry the exact quotient lhs/rhs as a witness.
    """
    name = "resultant-corrected" if corrected else "resultant"
    rep = Report(name, {"d": d, "m": m, "k": k}, mode)
    if mode == "symbolic":
        if d > 2 or m > 3:
            raise CostGuardExceeded("symbolic resultant identity limited to d <= 2, m <= 3")
        lhs, rhs = resultant_GH(d, m, k), resultant_identity_rhs(d, m, k, corrected)
        if lhs != rhs:
            try:
                q = str(lhs.exact_divide(rhs))
            except NotDivisible:
                q = None
            rep.failures.append({"lhs_over_rhs": q})
        return rep
    rep.trials = trials
    for t in range(trials):
        rng = trial_rng(seed, t)
        a = [random_rational(rng) for _ in range(d + 1)]
        b = [random_rational(rng) for _ in range(d + 1)]
        lhs, rhs = _lhs_at(d, m, k, a, b), _rhs_at(d, m, k, a, b, corrected)
        if lhs != rhs:
            rep.failures.append({"seed": seed, "trial": t, "lhs": str(lhs), "rhs": str(rhs),
                                 "b0": str(b[0])})
    return rep


def special_pair_resultant(d: int, m: int, k: int) -> tuple:
    """(Res(G,H), identity right-hand side) at F_a = z^d, F_b = (z-1)^d."""
    from math import comb

    a = [Fraction(1)] + [Fraction(0)] * d
    b = [Fraction((-1) ** i * comb(d, i)) for i in range(d + 1)]
    return _lhs_at(d, m, k, a, b), _rhs_at(d, m, k, a, b)


def h_factorization_check(b0, roots: Sequence, m: int) -> bool:
    """H_{b,m}(z) == (-1)^{(m+1)d} b_0^m prod (z - beta_i^m) for F_b = b_0 prod (z - beta_i)."""
    b0 = Fraction(b0)
    roots = [Fraction(r) for r in roots]
    d = len(roots)
    zero = Fraction(0)
    Fb = [b0]  # ascending
    for r in roots:
        Fb = poly_mul(Fb, [-r, Fraction(1)], zero) or [zero]
    Fb = Fb + [zero] * (d + 1 - len(Fb))
    b = Fb[::-1]
    Hc = [eval_poly(h, {f"b{i}": x for i, x in enumerate(b)}, zero)
          for h in generic_gh(d, m, 0).H_coeffs()]
    want = [Fraction((-1) ** ((m + 1) * d)) * b0 ** m]
    for r in roots:
        want = poly_mul(want, [-(r ** m), Fraction(1)], zero) or [zero]
    want = want + [zero] * (d + 1 - len(want))
    return trim(Hc[::-1]) == trim(want)


def is_m_nondegenerate(b: Sequence, m: int) -> bool:
    b = [Fraction(x) for x in b]
    d = len(b) - 1
    if not b[0] or not b[d]:
        return False
    return bool(eval_poly(disc_ratio(d, m), {f"b{i}": x for i, x in enumerate(b)}, Fraction(0)))


def degree_preservation_check(phi: RatFunc, m: int, k: int) -> bool:
    """True iff Res(G, H) != 0 at phi; cross-checked against the degree of the transform."""
    _check_char(phi.field, m)
    res = transform_detailed(phi, m, k)
    if res.degree_preserved != (res.value.true_degree() == phi.d):
        raise InvariantViolation("resultant criterion disagrees with the observed degree")
    return res.degree_preserved


def resultant_grid(d_max: int = 3, m_max: int = 4, trials: int = 100, seed: int = 0,
                   corrected: bool = False) -> list[Report]:
    return [verify_resultant_identity(d, m, k, "sampled", trials, seed, corrected)
            for d in range(1, d_max + 1) for m in range(1, m_max + 1) for k in range(m)]
