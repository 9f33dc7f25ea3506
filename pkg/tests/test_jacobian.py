import pytest
import sympy as sp

from landen.core import CostGuardExceeded, generic_gh
from landen.jacobian import (
    check_D_eq_mA,
    conjecture_probe,
    det_A,
    det_A_restricted,
    det_grading_check,
    det_monomial_check,
    entry_grading_check,
    jacobian_2_2_0_matches,
    jacobian_blocks,
    jacobian_det,
    jacobian_det_check,
    jacobian_latex,
    linear_in_a_check,
    matrix_composition_check,
    triangularity_check,
)
from landen.multipoly import MultiPoly, a_vars, b_vars

from test_multipoly import to_sympy

GRID = [(d, m, k) for d in (1, 2, 3) for m in (1, 2, 3, 4) for k in range(m)]


def test_displayed_jacobian():
    assert jacobian_2_2_0_matches()
    g = MultiPoly.gens(b_vars(2))
    zero = MultiPoly(b_vars(2))
    assert jacobian_blocks(2, 2, 0).A == [[g["b0"], g["b2"], zero], [zero, -g["b1"], zero], [zero, g["b0"], g["b2"]]]


def test_m1_blocks_constant():
    A = jacobian_blocks(3, 1, 0).A
    assert all(x.total_degree() <= 0 for row in A for x in row)


@pytest.mark.parametrize("d, m, k", [(2, 2, 0), (2, 3, 1), (1, 4, 3)])
def test_blocks_match_sympy_jacobian(d, m, k):
    pair = generic_gh(d, m, k)
    syms = sp.symbols(a_vars(d) + b_vars(d))
    coords = [to_sympy(c) for c in pair.G_coeffs() + pair.H_coeffs()]
    Js = sp.Matrix(coords).jacobian(syms).T  # rows: variables
    full = jacobian_blocks(d, m, k).full()
    ours = sp.Matrix([[to_sympy(x) for x in row] for row in full])
    assert sp.expand(ours - Js) == sp.zeros(2 * d + 2, 2 * d + 2)


@pytest.mark.parametrize("d, m", [(d, m) for d in (1, 2, 3) for m in (1, 2, 3, 4)])
def test_D_is_mA(d, m):
    assert check_D_eq_mA(d, m)


@pytest.mark.parametrize("d, m, k", GRID)
def test_block_structure(d, m, k):
    assert linear_in_a_check(d, m, k)
    assert entry_grading_check(d, m, k)
    assert det_grading_check(d, m, k)
    assert triangularity_check(d, m, k)
    assert det_monomial_check(d, m, k)
    assert jacobian_det_check(d, m, k)


def test_det_examples():
    g = MultiPoly.gens(b_vars(2))
    assert det_A(2, 2, 0) == -g["b0"] * g["b1"] * g["b2"]
    assert jacobian_det(2, 2, 0) == 8 * (g["b0"] * g["b1"] * g["b2"]) ** 2
    assert det_A(1, 2, 0).terms[(1, 1)] == -1  # coefficient of b0*b1
    c = jacobian_det(3, 1, 0)
    assert c.total_degree() == 0 and c


def test_det_matches_sympy():
    for d, m, k in [(2, 2, 0), (2, 3, 0), (2, 3, 1)]:
        Ap = jacobian_blocks(d, m, k).A if k == 0 else jacobian_blocks(d, m, k).restricted_A()
        ours = det_A(d, m, k) if k == 0 else det_A_restricted(d, m, k)
        Ms = sp.Matrix([[to_sympy(x) for x in row] for row in Ap])
        assert sp.expand(Ms.det() - to_sympy(ours)) == 0


def test_full_det_vanishes_for_positive_k():
    assert not det_A(2, 3, 1)


def test_triangularity_k0_column_zero():
    A = jacobian_blocks(2, 2, 0).A
    assert A[0][0] == MultiPoly.gens(b_vars(2))["b0"] * (-1) ** (3 * 2)
    assert not any(A[i][0] for i in range(1, 3))


def test_guard():
    with pytest.raises(CostGuardExceeded):
        jacobian_blocks(4, 2, 0)


def test_latex_emitter():
    out = jacobian_latex(jacobian_blocks(1, 1, 0).full())
    assert out.startswith("\\begin{pmatrix}") and out.count("\\\\") == 3


def test_conjecture_probe_reports_only():
    rep = conjecture_probe(2, 2, 0)
    assert rep.details["det_identity"] == "holds" and not rep.failures
    rep = conjecture_probe(2, 2, 1)
    assert not rep.failures
    assert rep.details["det_identity"] in ("holds", "fails")
    # observed relating sign on this cell is (-1)^{dk}
    assert rep.details["det_identity_observed_sign"] == (-1) ** (2 * 1)


def test_conjecture_probe_sign_pattern():
    for d, m, k in GRID:
        if k == 0:
            continue
        assert conjecture_probe(d, m, k).details["det_identity_observed_sign"] == (-1) ** (d * k)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_matrix_composition(d):
    for m, n in [(1, 2), (2, 1), (2, 2), (1, 4), (4, 1), (3, 1), (1, 3)]:
        for k in range(m):
            for l in range(n):
                rep = matrix_composition_check(d, m, k, n, l)
                assert rep, (m, k, n, l)


def test_matrix_composition_needs_inner_degree():
    # substituting h_m(b) instead of h_n(b) breaks the law once m != n
    assert matrix_composition_check(2, 2, 1, 1, 0).details["with_h_m"] == "fails"
    assert matrix_composition_check(2, 2, 1, 2, 1).details["with_h_m"] == "holds"
