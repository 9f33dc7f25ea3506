from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gold import DISPLAYS, NEGATED, display_pair
from landen.core import (
    CharDividesM,
    IndeterminatePoint,
    LandenPair,
    MonoidElem,
    compose_check,
    embedding_compat_check,
    frobenius_form_check,
    generic_gh,
    indeterminacy_check,
    invariant_subspace_check,
    laurent_relation_check,
    laurent_transform_oracle,
    leading_form_check,
    pair_grading_check,
    power_on_monomial,
    projective_map,
    random_ratfunc,
    transform,
    transform_detailed,
    trial_rng,
    zeta_independence_check,
)
from landen.exactrings import GF
from landen.multipoly import MultiPoly, landen_vars
from landen.ratfunc import LaurentPrefix, RatFunc, laurent_expand

GRID = [(d, m, k) for d in (1, 2, 3) for m in (1, 2, 3, 4) for k in range(m)]


@pytest.mark.parametrize("key", sorted(DISPLAYS))
def test_worked_examples(key):
    num, den = display_pair(*key)
    pair = generic_gh(*key)
    sign = -1 if key in NEGATED else 1
    assert pair.G == num * sign
    assert pair.H_full() == den * sign


def test_negated_displays_are_projectively_equal():
    for key in NEGATED:
        num, den = display_pair(*key)
        pair = generic_gh(*key)
        assert pair.G * den == num * pair.H_full()


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_m1_is_identity(d):
    pair = generic_gh(d, 1, 0)
    g = MultiPoly.gens(landen_vars(d))
    assert pair.G == sum((g[f"a{i}"] * g["z"] ** (d - i) for i in range(d + 1)), MultiPoly(landen_vars(d)))
    assert pair.H_full() == sum((g[f"b{i}"] * g["z"] ** (d - i) for i in range(d + 1)), MultiPoly(landen_vars(d)))


@pytest.mark.parametrize("d, m, k", GRID)
def test_pair_invariants(d, m, k):
    assert pair_grading_check(d, m, k)
    assert leading_form_check(generic_gh(d, m, k))


def test_leading_form_degree_drop():
    assert generic_gh(3, 2, 1).G.degree("z") == 2


def test_bad_k():
    with pytest.raises(ValueError):
        generic_gh(2, 2, 2)


def test_transform_examples():
    phi = RatFunc([1, 0, 1], [1, 1, 1], 2)
    assert transform(phi, 2, 0) == RatFunc([1, 2, 1], [1, 1, 1], 2)
    assert transform(phi, 1, 0) == phi
    z5 = RatFunc([1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 1], 5)
    out = transform(z5, 2, 1)
    assert out == RatFunc([1, 0, 0], [0, 0, 1], 2) and out.true_degree() == 2


def test_transform_over_prime_field():
    F = GF(5)
    phi = RatFunc([1, 0, 1], [1, 1, 1], 2, F)
    assert transform(phi, 2, 0) == RatFunc([1, 2, 1], [1, 1, 1], 2, F)
    with pytest.raises(CharDividesM):
        transform(RatFunc([1, 0, 1], [1, 1, 1], 2, GF(2)), 2, 0)


def test_zero_function():
    zero = RatFunc([0, 0, 0], [1, 2, 3], 2)
    assert transform(zero, 3, 1).is_zero()
    assert transform(zero, 3, 1).true_degree() == 0


def test_transform_raw_and_flag():
    res = transform_detailed(RatFunc([1, 0, 0], [0, 0, 1], 2), 2, 0)
    assert not res.degree_preserved and res.value.true_degree() == 1


def test_laurent_oracle_examples():
    for e in range(0, 8):
        for m in (1, 2, 3):
            for k in range(m):
                s = LaurentPrefix(e, (1,) + (0,) * 20)
                out = laurent_transform_oracle(s, m, k)
                expected = power_on_monomial(m, k, e)
                got = [(c, out.start + i) for i, c in enumerate(out.coeffs) if c]
                assert got == ([] if expected is None else [expected])
    ones = laurent_transform_oracle(LaurentPrefix(0, (1,) * 20), 2, 0)
    assert set(ones.coeffs) == {1}
    const = laurent_transform_oracle(LaurentPrefix(0, (5,) + (0,) * 10), 3, 1)
    assert not any(const.coeffs)


@pytest.mark.parametrize("m, k", [(m, k) for m in (1, 2, 3, 4) for k in range(m)])
def test_defining_relation(m, k):
    for t in range(15):
        rng = trial_rng(11, t)
        assert laurent_relation_check(random_ratfunc(rng, rng.randint(1, 3)), m, k)


def test_defining_relation_with_pole():
    phi = RatFunc([1, 0, 3, 1], [2, 1, 0, 0], 3)  # pole of order 2 at 0
    for m, k in [(2, 0), (2, 1), (3, 2)]:
        assert laurent_relation_check(phi, m, k)


q = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@settings(max_examples=30, deadline=None)
@given(st.lists(q, min_size=3, max_size=3), st.lists(q, min_size=3, max_size=3), q, q,
       st.sampled_from([(2, 0), (2, 1), (3, 1)]))
def test_linearity(num1, num2, alpha, beta, mk):
    m, k = mk
    den = [Fraction(1), Fraction(2), Fraction(3)]
    phi, psi = RatFunc(num1, den, 2), RatFunc(num2, den, 2)
    combo = RatFunc([alpha * x + beta * y for x, y in zip(num1, num2)], den, 2)
    lhs = transform(combo, m, k)
    rhs = transform(phi, m, k).scale(alpha) + transform(psi, m, k).scale(beta)
    assert lhs == rhs


def test_projective_map():
    P = projective_map([1, 0, 1, 1, 1, 1], 2, 2, 0)
    assert P.coords == (1, 2, 1, 1, 1, 1)
    with pytest.raises(IndeterminatePoint):
        projective_map([1, 2, 3, 0, 0, 0], 2, 2, 0)
    assert projective_map([3, 1, 4, 1, 5, 9], 2, 1, 0).coords == (3, 1, 4, 1, 5, 9)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=6, max_size=6), st.integers(-5, 5).filter(bool))
def test_projective_map_scaling(P, lam):
    if not any(P[3:]):
        P[5] = 1
    assert projective_map([lam * x for x in P], 2, 3, 1) == projective_map(P, 2, 3, 1)


def test_compose_examples():
    assert compose_check(3, 2, 1, 2, 0, "sampled", 20, 0)
    assert compose_check(2, 3, 2, 1, 0, "sampled", 10, 0)
    assert compose_check(2, 2, 0, 3, 0, "sampled", 10, 0)
    assert compose_check(2, 3, 0, 2, 0, "sampled", 10, 0)
    assert compose_check(2, 2, 1, 3, 2, "symbolic")


def test_monoid():
    assert MonoidElem(2, 1) * MonoidElem(2, 0) == MonoidElem(4, 2)
    x = MonoidElem(3, 2)
    assert MonoidElem(1, 0) * x == x
    for r in range(5):
        assert x ** r == MonoidElem(3 ** r, sum(3 ** i for i in range(r)) * 2)


def test_monoid_injective_on_monomials():
    seen = {}
    for m in range(1, 5):
        for k in range(m):
            sig = tuple(power_on_monomial(m, k, e) for e in range(12))
            assert sig not in seen
            seen[sig] = (m, k)


def test_zeta_independence():
    assert zeta_independence_check(2, 4, 1).details["roots"] == [1, 3]
    assert zeta_independence_check(2, 4, 1)
    assert zeta_independence_check(3, 6, 2)
    assert zeta_independence_check(2, 2, 0)


def test_frobenius():
    assert frobenius_form_check(2, 2)
    assert frobenius_form_check(1, 3)
    with pytest.raises(ValueError):
        frobenius_form_check(2, 4)


def test_embedding():
    assert embedding_compat_check(2, 2, 0, "symbolic")
    assert embedding_compat_check(3, 1, 0, "symbolic")
    assert embedding_compat_check(3, 2, 1, "sampled", 50, 0)


def _cdiv(a, b):
    return -((-a) // b)


def _expected_invariant(name, d, m, k):
    """Orders of vanishing: at infinity ceil((i+1+k)/m), at zero ceil((i+1-k)/m)."""
    i = int(name[1:])
    if name[0] == "W" or i == d:
        return True
    if name[0] == "U":
        return _cdiv(i + 1 + k, m) >= i + 1
    return _cdiv(i + 1 - k, m) >= i + 1


@pytest.mark.parametrize("d, m, k", GRID)
def test_invariant_subspaces(d, m, k):
    rep = invariant_subspace_check(d, m, k, trials=10, seed=0)
    assert rep  # image of k >= 1 lies in a_0 = 0
    for name in rep.details["invariant"]:
        assert _expected_invariant(name, d, m, k), name
    for name in rep.details["not_invariant"]:
        assert not _expected_invariant(name, d, m, k), name


def test_invariant_subspace_examples():
    rep = invariant_subspace_check(2, 2, 0)
    assert "U0" in rep.details["invariant"] and "W0" in rep.details["invariant"]
    assert "U1" in rep.details["not_invariant"]


@pytest.mark.parametrize("d, m, k", [(1, 2, 1), (2, 3, 0), (3, 2, 1), (2, 1, 0)])
def test_indeterminacy(d, m, k):
    assert indeterminacy_check(d, m, k, samples=100)


def test_pair_serialization():
    pair = generic_gh(2, 3, 1)
    assert LandenPair.from_json(pair.to_json()) == pair
    latex = generic_gh(2, 2, 1).to_latex()
    assert latex == ("\\mathfrak{F}_{2,1}(\\varphi)(z) = \\frac{(-b_1 a_0 + b_0 a_1) z + b_2 a_1 - b_1 a_2}"
                     "{b_0^2 z^2 + (2 b_2 b_0 - b_1^2) z + b_2^2}")


@pytest.mark.parametrize("p", [2, 3])
def test_projective_map_when_char_divides_m(p):
    F = GF(p)
    P = [F(x) for x in (1, 2, 0, 1, 1, 1)]
    img = projective_map(P, 2, p, 0).coords
    b = P[3:]
    frob = [x ** p for x in b]
    # the b-part is proportional to (b_i^p)
    ratio = next(img[3 + i] / frob[i] for i in range(3) if frob[i])
    assert list(img[3:]) == [ratio * x for x in frob]
