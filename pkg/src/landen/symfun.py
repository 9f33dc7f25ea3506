"""The denominator map h_m on projective d-space and its power-map conjugacy.

h_m sends the coefficient vector of F_b to the coefficient vector of
H_{b,m}. Through signed elementary symmetric functions it is conjugate to
raising every root of F_b to the m-th power.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .core import Report, eval_poly, generic_gh, random_rational, trial_rng
from .multipoly import MultiPoly, b_vars
from .ratfunc import ProjPoint, normalize_proj


def sigma_bar(x: Sequence) -> tuple:
    """((-1)^i e_i(x))_{i=1..d}: the non-leading coefficients of prod (z - x_i)."""
    coeffs = [Fraction(1)]  # descending coefficients of the monic product
    for r in x:
        nxt = coeffs + [Fraction(0)]
        for i in range(1, len(nxt)):
            nxt[i] -= r * coeffs[i - 1]
        coeffs = nxt
    return tuple(coeffs[1:])


def sigma_bar_symbolic(d: int) -> list[MultiPoly]:
    """sigma_bar on generic variables x1..xd, as integer polynomials."""
    X = tuple(f"x{i}" for i in range(1, d + 1))
    g = MultiPoly.gens(X)
    coeffs = [MultiPoly.constant(1, X)]
    for i in range(1, d + 1):
        nxt = coeffs + [MultiPoly(X)]
        for j in range(1, len(nxt)):
            nxt[j] = nxt[j] - g[f"x{i}"] * coeffs[j - 1]
        coeffs = nxt
    return coeffs[1:]


def _h_values(b: Sequence, m: int) -> list:
    d = len(b) - 1
    zero = b[0] - b[0]
    vals = {f"b{i}": x for i, x in enumerate(b)}
    return [eval_poly(h, vals, zero) for h in generic_gh(d, m, 0).H_coeffs()]


def h_m_raw(b: Sequence, m: int) -> list:
    """Coefficients of H_{b,m} at b, unnormalized."""
    if len(b) < 2:
        raise ValueError("need a point of projective space of dimension >= 1")
    return _h_values(list(b), m)


def h_m_projective(b: Sequence, m: int) -> ProjPoint:
    coords = list(b.coords if isinstance(b, ProjPoint) else b)
    if not any(coords):
        raise ValueError("the zero vector is not a projective point")
    return normalize_proj(h_m_raw([Fraction(c) for c in coords], m))


def h_m_affine(b: Sequence, m: int) -> tuple:
    """h_m on the chart b_0 = 1, normalized so that the output is again monic.

    H_{m,0} = (-1)^{(m+1)d} there, so the other coordinates are multiplied
    by that sign.
    """
    b = [Fraction(x) for x in b]
    d = len(b)
    if d == 0:
        return ()
    vals = h_m_raw([Fraction(1)] + b, m)
    sign = -1 if ((m + 1) * d) % 2 else 1
    return tuple(sign * v for v in vals[1:])


def conjugacy_check(u: Sequence, m: int) -> bool:
    u = [Fraction(x) for x in u]
    return h_m_affine(sigma_bar(u), m) == sigma_bar([x ** m for x in u])


def conjugacy_suite(d_max: int = 4, m_max: int = 4, trials: int = 100, seed: int = 0) -> Report:
    rep = Report("hm-conjugacy", {"d_max": d_max, "m_max": m_max}, "sampled", trials)
    for d in range(1, d_max + 1):
        for m in range(1, m_max + 1):
            for t in range(trials):
                rng = trial_rng(seed, t)
                u = [rng.randint(-9, 9) for _ in range(d)]
                if not conjugacy_check(u, m):
                    rep.failures.append({"d": d, "m": m, "seed": seed, "trial": t, "u": u})
    return rep


def strata_restriction_check(d: int, m: int, trials: int = 20, seed: int = 0) -> Report:
    """On b_0 = ... = b_{n-1} = 0 != b_n, h_m keeps the stratum and acts as h_m in dimension d-n.

    The lower-dimensional action is then tested against the conjugacy with
    the roots of the degree d-n polynomial b_n z^{d-n} + ... + b_d.
    """
    rep = Report("hm-strata", {"d": d, "m": m}, "sampled", trials)
    for n in range(d + 1):
        for t in range(trials):
            rng = trial_rng(seed, 1000 * n + t)
            roots = [rng.randint(-6, 6) for _ in range(d - n)]
            lead = Fraction(rng.randint(1, 5))
            tail = [lead * c for c in (Fraction(1),) + sigma_bar(roots)]
            b = [Fraction(0)] * n + tail
            img = h_m_raw(b, m)
            wit = {"n": n, "trial": t, "b": [str(x) for x in b]}
            if any(img[:n]):
                rep.failures.append(dict(wit, reason="stratum not preserved"))
                continue
            expected = h_m_raw(tail, m) if len(tail) > 1 else [lead ** m]
            if img[n:] != expected:
                rep.failures.append(dict(wit, reason="differs from lower-dimensional h_m"))
                continue
            if roots and not conjugacy_check(roots, m):
                rep.failures.append(dict(wit, reason="lower-dimensional conjugacy fails"))
    return rep


def zero_locus_check(d: int, m: int, samples: int = 1000, seed: int = 0) -> Report:
    """h_m(b) = 0 only at b = 0: symbolic at b = 0 and nonvanishing at random b != 0."""
    rep = Report("hm-zero-locus", {"d": d, "m": m}, "sampled", samples)
    H = generic_gh(d, m, 0).H_coeffs()
    if any(h.specialize({v: 0 for v in b_vars(d)}) for h in H):
        rep.failures.append("some coordinate survives b = 0")
    for t in range(samples):
        rng = trial_rng(seed, t)
        b = [random_rational(rng) for _ in range(d + 1)]
        if not any(b):
            b[rng.randrange(d + 1)] = Fraction(1)
        # sparse points hit the boundary strata too
        for i in range(d + 1):
            if rng.random() < 0.3 and sum(1 for x in b if x) > 1:
                b[i] = Fraction(0)
        if not any(h_m_raw(b, m)):
            rep.failures.append({"trial": t, "b": [str(x) for x in b]})
    return rep


def semigroup_check(d: int, m: int, n: int, trials: int = 50, seed: int = 0) -> Report:
    """h_m o h_n = h_{mn} on sampled points."""
    rep = Report("hm-semigroup", {"d": d, "m": m, "n": n}, "sampled", trials)
    for t in range(trials):
        rng = trial_rng(seed, t)
        b = [random_rational(rng) for _ in range(d + 1)]
        if not any(b):
            b[0] = Fraction(1)
        if h_m_raw(h_m_raw(b, n), m) != h_m_raw(b, m * n):
            rep.failures.append({"trial": t, "b": [str(x) for x in b]})
    return rep
