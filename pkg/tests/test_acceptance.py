"""The twelve acceptance criteria, one test each, with wall-clock limits.

Every test records a PASS/FAIL line that is printed at the end of the run.
Criterion 4 as stated does not hold for k >= 1; that test is a strict xfail
and the corrected b_0 exponent is checked alongside it.
"""

import itertools
import random
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from gold import DISPLAYS, NEGATED, display_pair
from landen.core import (
    MonoidElem,
    compose_check,
    eval_poly,
    frobenius_form_check,
    generic_gh,
    indeterminacy_check,
    invariant_subspace_check,
    laurent_relation_check,
    pair_grading_check,
    power_on_monomial,
    random_ratfunc,
    trial_rng,
    zeta_independence_check,
)
from landen.elimination import (
    disc_ratio,
    h_factorization_check,
    special_pair_resultant,
    verify_resultant_identity,
)
from landen.exactrings import GF
from landen.jacobian import (
    check_D_eq_mA,
    det_monomial_check,
    jacobian_2_2_0_matches,
    jacobian_det_check,
    triangularity_check,
)
from landen.multipoly import MultiPoly, b_vars
from landen.symfun import conjugacy_suite, strata_restriction_check, zero_locus_check

GRID = [(d, m, k) for d in (1, 2, 3) for m in (1, 2, 3, 4) for k in range(m)]


@contextmanager
def criterion(n: int, title: str, limit: float, note: str = ""):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        ACCEPTANCE_LINES.append(f"[{n:2d}] FAIL  {title} ({elapsed:.1f}s) {note or exc}".rstrip())
        print(ACCEPTANCE_LINES[-1])
        raise
    ACCEPTANCE_LINES.append(f"[{n:2d}] PASS  {title} ({elapsed:.1f}s) {note}".rstrip())
    print(ACCEPTANCE_LINES[-1])


def test_01_gold_formulas():
    with criterion(1, "worked generic pairs reproduced", 5):
        for key in sorted(DISPLAYS):
            num, den = display_pair(*key)
            pair = generic_gh(*key)
            sign = -1 if key in NEGATED else 1
            assert pair.G == num * sign and pair.H_full() == den * sign, key


def test_02_defining_relation():
    with criterion(2, "Laurent coefficient extraction, 100 random maps per (m,k)", 30):
        for m in range(1, 5):
            for k in range(m):
                for t in range(100):
                    rng = trial_rng(2, t)
                    phi = random_ratfunc(rng, rng.randint(1, 3))
                    assert laurent_relation_check(phi, m, k, 20), (m, k, t)


def test_03_composition():
    with criterion(3, "composition law, sampled d<=3 and symbolic d<=2", 60):
        for d in (1, 2, 3):
            for m, n in itertools.product((1, 2, 3), repeat=2):
                for k, l in itertools.product(range(m), range(n)):
                    assert compose_check(d, m, k, n, l, "sampled", 50, 3), (d, m, k, n, l)
        for d in (1, 2):
            for m, n in itertools.product(range(1, 7), repeat=2):
                if m * n > 6:
                    continue
                for k, l in itertools.product(range(m), range(n)):
                    assert compose_check(d, m, k, n, l, "symbolic"), (d, m, k, n, l)


def _criterion_4_cells(corrected):
    for d in (1, 2):
        for m in (1, 2, 3):
            for k in range(m):
                yield verify_resultant_identity(d, m, k, "symbolic", corrected=corrected)
    for m in range(1, 5):
        for k in range(m):
            yield verify_resultant_identity(3, m, k, "sampled", 100, 4, corrected=corrected)


@pytest.mark.xfail(strict=True, reason="stated b_0 exponent m-1 is short by b_0^k when k >= 1")
def test_04_resultant_identity_as_stated():
    note = "stated b_0^(m-1) fails for every k>=1 cell (lhs/rhs = b_0^k); see 04-corrected"
    with criterion(4, "resultant identity with b_0^(m-1)", 120, note):
        failing = [r.grid for r in _criterion_4_cells(False) if not r]
        assert not failing, f"{len(failing)} failing cells"


def test_04_resultant_identity_corrected_and_special_pair():
    note = "with b_0^(m-1+k); sign and special-pair value as stated"
    with criterion(4, "resultant identity (corrected exponent), special pair", 120, note):
        for rep in _criterion_4_cells(True):
            assert rep, rep.grid
        # the stated form does hold whenever k = 0
        for rep in _criterion_4_cells(False):
            if rep.grid["k"] == 0:
                assert rep, rep.grid
        for d in (1, 2, 3):
            for m in (1, 2, 3, 4):
                for k in range(m):
                    lhs, rhs = special_pair_resultant(d, m, k)
                    assert lhs == rhs == (-1) ** d * m ** (d * (d - 1)), (d, m, k)
        assert special_pair_resultant(2, 2, 0)[0] == 4


def test_05_discriminant_divisibility():
    with criterion(5, "Disc(F) divides Disc(H); ratio b_1^2 at d=m=2", 30):
        assert disc_ratio(2, 2) == MultiPoly.gens(b_vars(2))["b1"] ** 2
        for d in (1, 2, 3):
            for m in (1, 2, 3, 4):
                disc_ratio(d, m)  # raises InvariantViolation when not exact


def _from_roots(b0, roots):
    c = [b0]
    for r in roots:
        nxt = c + [b0 - b0]
        for i in range(1, len(nxt)):
            nxt[i] = nxt[i] - r * c[i - 1]
        c = nxt
    return c


def _degenerate(roots, m):
    for x, y in itertools.combinations(roots, 2):
        if x == y:
            if x == 0 and m > 1:
                return True
        elif x ** m == y ** m:
            return True
    return False


def test_06_factorization_and_vanishing():
    with criterion(6, "H factorization on root tuples; disc ratio vanishing exactly on degenerate tuples", 30):
        for d in range(1, 5):
            for m in range(1, 5):
                rng = random.Random(f"6:{d}:{m}")
                for _ in range(100):
                    roots = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(d)]
                    b0 = Fraction(rng.choice([-2, -1, 1, 3]), rng.randint(1, 3))
                    assert h_factorization_check(b0, roots, m), (d, m, roots)
        cases = [(Fraction(1), range(-2, 3), d, m) for d in (2, 3, 4) for m in (1, 2, 3, 4)]
        F = GF(13)  # contains the cube and fourth roots of unity
        cases += [(F(1), [F(x) for x in range(13)], 2, m) for m in (2, 3, 4)]
        for one, pool, d, m in cases:
            ratio = disc_ratio(d, m)
            for roots in itertools.product(pool, repeat=d):
                b = _from_roots(one, roots)
                val = eval_poly(ratio, {f"b{i}": x for i, x in enumerate(b)}, one - one)
                assert (not val) == _degenerate(roots, m), (d, m, roots)


def test_07_gradings():
    with criterion(7, "bidegree, degree and weight gradings on the grid", 10):
        for cell in GRID:
            assert pair_grading_check(*cell), cell


def test_08_jacobian():
    with criterion(8, "Jacobian blocks, triangularity, determinant monomials", 120):
        assert jacobian_2_2_0_matches()
        for d, m, k in GRID:
            if k == 0:
                assert check_D_eq_mA(d, m), (d, m)
            assert triangularity_check(d, m, k), (d, m, k)
            assert det_monomial_check(d, m, k), (d, m, k)
            assert jacobian_det_check(d, m, k), (d, m, k)


def test_09_frobenius():
    with criterion(9, "H_i = b_i^p mod p", 10):
        for p in (2, 3, 5):
            for d in (1, 2, 3):
                assert frobenius_form_check(d, p), (d, p)


def test_10_hm_conjugacy():
    with criterion(10, "h_m conjugacy, strata, zero locus", 30):
        assert conjugacy_suite(4, 4, 100, 10)
        for d in range(1, 5):
            for m in range(1, 5):
                assert strata_restriction_check(d, m, 20, 10), (d, m)
                assert zero_locus_check(d, m, 1000, 10), (d, m)


def test_11_indeterminacy():
    note = "m>=2; m=1 is the identity map and has no indeterminacy"
    with criterion(11, "indeterminacy locus b=0 and image in a_0=0 for k>=1", 10, note):
        for d, m, k in GRID:
            rep = indeterminacy_check(d, m, k, 1000, 11)
            assert rep, (d, m, k)
            if m == 1:
                assert rep.details["locus"] == "empty"
            if k >= 1:
                assert invariant_subspace_check(d, m, k, 20, 11), (d, m, k)


def test_12_zeta_and_monoid():
    with criterion(12, "primitive-root independence (m<=6) and monoid law", 10):
        for d in (1, 2, 3):
            for m in range(1, 7):
                for k in range(m):
                    assert zeta_independence_check(d, m, k), (d, m, k)
        for m, n in itertools.product(range(1, 5), repeat=2):
            for k, l in itertools.product(range(m), range(n)):
                prod = MonoidElem(m, k) * MonoidElem(n, l)
                assert prod == MonoidElem(m * n, k * n + l)
                for e in range(-6, 30):
                    inner = power_on_monomial(n, l, e)
                    step = None if inner is None else power_on_monomial(m, k, inner[1])
                    assert step == power_on_monomial(prod.m, prod.k, e), (m, k, n, l, e)
