"""Jacobian structure of the coefficient map [a; b] -> [G; H].

Block convention: ``A[i][j] = dG_j/da_i``, ``C[i][j] = dG_j/db_i`` and
``D[i][j] = dH_j/db_i``, where G_j is the z^{d-j} coefficient. Rows are
indexed by the differentiation variable, so the coefficient vector of G
equals A^T a.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CostGuardExceeded, Report, _check_dmk, generic_gh
from .elimination import det_poly
from .multipoly import MultiPoly, a_vars, b_vars

Matrix = list[list[MultiPoly]]


def _guard(d: int, m: int):
    if d > 3 or m > 4:
        raise CostGuardExceeded("Jacobian computations limited to d <= 3, m <= 4")


@dataclass(frozen=True)
class JacobianBlocks:
    d: int
    m: int
    k: int
    A: Matrix  # entries in b
    C: Matrix  # entries in a, b
    D: Matrix  # entries in b

    def full(self) -> Matrix:
        """The (2d+2)-square matrix [[A, 0], [C, D]] over (a, b)."""
        ab = a_vars(self.d) + b_vars(self.d)
        zero = MultiPoly(ab)
        top = [[x.with_vars(ab) for x in row] + [zero] * (self.d + 1) for row in self.A]
        bottom = [[x.with_vars(ab) for x in rc] + [x.with_vars(ab) for x in rd]
                  for rc, rd in zip(self.C, self.D)]
        return top + bottom

    def restricted_A(self) -> Matrix:
        """A' : first row and column deleted (A does not involve a_0)."""
        return [row[1:] for row in self.A[1:]]


def jacobian_blocks(d: int, m: int, k: int) -> JacobianBlocks:
    _check_dmk(d, m, k)
    _guard(d, m)
    pair = generic_gh(d, m, k)
    B = b_vars(d)
    G, H = pair.G_coeffs(), pair.H_coeffs()
    A = [[G[j].diff(f"a{i}").with_vars(B) for j in range(d + 1)] for i in range(d + 1)]
    C = [[G[j].diff(f"b{i}") for j in range(d + 1)] for i in range(d + 1)]
    D = [[H[j].diff(f"b{i}") for j in range(d + 1)] for i in range(d + 1)]
    return JacobianBlocks(d, m, k, A, C, D)


def jacobian_latex(J: Matrix) -> str:
    from .core import poly_latex

    rows = [" & ".join(poly_latex(x) for x in row) for row in J]
    return "\\begin{pmatrix}\n" + " \\\\\n".join(rows) + "\n\\end{pmatrix}"


def check_D_eq_mA(d: int, m: int) -> bool:
    J = jacobian_blocks(d, m, 0)
    return all(J.D[i][j] == J.A[i][j] * m for i in range(d + 1) for j in range(d + 1))


def linear_in_a_check(d: int, m: int, k: int) -> bool:
    """The G coefficient list equals A^T a."""
    J = jacobian_blocks(d, m, k)
    ab = a_vars(d) + b_vars(d)
    g = MultiPoly.gens(ab)
    G = generic_gh(d, m, k).G_coeffs()
    for j in range(d + 1):
        s = MultiPoly(ab)
        for i in range(d + 1):
            s = s + J.A[i][j].with_vars(ab) * g[f"a{i}"]
        if s != G[j]:
            return False
    return True


def entry_grading_check(d: int, m: int, k: int) -> Report:
    """Every entry of A has degree m-1 and weight mj-i-k (zero entries pass)."""
    rep = Report("jacobian-entry-grading", {"d": d, "m": m, "k": k})
    A = jacobian_blocks(d, m, k).A
    wts = {f"b{i}": i for i in range(d + 1)}
    B = b_vars(d)
    for i in range(d + 1):
        for j in range(d + 1):
            x = A[i][j]
            if not x:
                continue
            hd, deg = x.grading("degree", vars=B)
            hw, wt = x.grading("weight", weights=wts)
            if not (hd and deg == m - 1 and hw and wt == m * j - i - k):
                rep.failures.append({"i": i, "j": j, "degree": deg, "weight": wt})
    return rep


def det_A(d: int, m: int, k: int) -> MultiPoly:
    return det_poly(jacobian_blocks(d, m, k).A)


def det_A_restricted(d: int, m: int, k: int) -> MultiPoly:
    Ap = jacobian_blocks(d, m, k).restricted_A()
    return det_poly(Ap) if Ap else MultiPoly.constant(1, b_vars(d))


def det_grading_check(d: int, m: int, k: int) -> Report:
    rep = Report("jacobian-det-grading", {"d": d, "m": m, "k": k})
    det = det_A(d, m, k)
    rep.details["det_A_zero"] = not det
    if det:
        wts = {f"b{i}": i for i in range(d + 1)}
        hd, deg = det.grading("degree", vars=b_vars(d))
        hw, wt = det.grading("weight", weights=wts)
        want = ((m - 1) * (d + 1), (m - 1) * (d * d + d) // 2 - k * (d + 1))
        if not (hd and hw and (deg, wt) == want):
            rep.failures.append({"degree": deg, "weight": wt, "expected": want})
    return rep


# ---------------------------------------------------------------------------
# triangularity modulo the ideals I_j, I'_j
# ---------------------------------------------------------------------------


def _reduce_mod(p: MultiPoly, killed: list[str], capped: tuple[str, int] | None = None) -> MultiPoly:
    """Drop every monomial lying in (killed variables, capped[0]**capped[1])."""
    idx = [p.index(v) for v in killed]
    cap = (p.index(capped[0]), capped[1]) if capped else None
    terms = {e: c for e, c in p.terms.items()
             if not any(e[i] for i in idx) and not (cap and e[cap[0]] >= cap[1])}
    return MultiPoly(p.vars, terms, p.ring)


def _bmono(d: int, coeff: int, **exps) -> MultiPoly:
    B = b_vars(d)
    e = [0] * (d + 1)
    for v, x in exps.items():
        e[B.index(v)] += x
    return MultiPoly(B, {tuple(e): coeff})


def triangularity_check(d: int, m: int, k: int = 0) -> Report:
    """Column-wise triangularity of A (k = 0) or A' (1 <= k < m) modulo I_j / I'_j."""
    _check_dmk(d, m, k)
    rep = Report("jacobian-triangularity", {"d": d, "m": m, "k": k})
    A = jacobian_blocks(d, m, k).A
    cols = range(d + 1) if k == 0 else range(1, d + 1)
    for j in cols:
        if k == 0:
            red = lambda x: _reduce_mod(x, [f"b{t}" for t in range(j)])
            want = _bmono(d, (-1) ** ((m + 1) * (d - j)), **{f"b{j}": m - 1})
        else:
            red = lambda x: _reduce_mod(x, [f"b{t}" for t in range(j - 1)], (f"b{j - 1}", k + 1))
            exps = {f"b{j}": m - 1 - k}
            exps[f"b{j - 1}"] = k
            want = _bmono(d, (-1) ** ((m + 1) * (d - j) + k), **exps)
        for i in range(j + 1, d + 1):
            r = red(A[i][j])
            if r:
                rep.failures.append({"i": i, "j": j, "residue": str(r)})
        r = red(A[j][j])
        if r != want:
            rep.failures.append({"i": j, "j": j, "residue": str(r), "expected": str(want)})
    return rep


# ---------------------------------------------------------------------------
# determinant monomials
# ---------------------------------------------------------------------------


def _coeff_of(p: MultiPoly, mono: MultiPoly) -> int:
    e = next(iter(mono.terms))
    return p.terms.get(e, 0)


def det_monomial(d: int, m: int, k: int) -> tuple[MultiPoly, int]:
    """(monomial, signed coefficient) asserted to occur in det A (k = 0) or det A' (k >= 1)."""
    if k == 0:
        sign = (-1) ** ((m + 1) * ((d * d + d) // 2))
        return _bmono(d, 1, **{f"b{i}": m - 1 for i in range(d + 1)}), sign
    sign = (-1) ** ((m + 1) * ((d * d - d) // 2) + d * k)
    exps = {f"b{i}": m - 1 for i in range(1, d)}
    exps["b0"] = k
    exps[f"b{d}"] = m - 1 - k
    return _bmono(d, 1, **exps), sign


def det_monomial_check(d: int, m: int, k: int) -> Report:
    _check_dmk(d, m, k)
    _guard(d, m)
    rep = Report("jacobian-det-monomial", {"d": d, "m": m, "k": k})
    det = det_A(d, m, k) if k == 0 else det_A_restricted(d, m, k)
    mono, want = det_monomial(d, m, k)
    got = _coeff_of(det, mono)
    rep.details.update({"monomial": str(mono), "coefficient": got, "expected": want})
    if got != want:
        rep.failures.append({"monomial": str(mono), "coefficient": got, "expected": want})
    return rep


def jacobian_det(d: int, m: int, k: int) -> MultiPoly:
    """det J = det A * det D for k = 0. For k >= 1 det A vanishes identically
    (the z^d coefficient of G is zero), so the returned value is the
    determinant det A' * det D of the map restricted to a_0 = 0."""
    _check_dmk(d, m, k)
    _guard(d, m)
    J = jacobian_blocks(d, m, k)
    detD = det_poly(J.D)
    return (det_poly(J.A) if k == 0 else det_A_restricted(d, m, k)) * detD


def jacobian_det_monomial(d: int, m: int, k: int) -> tuple[MultiPoly, int]:
    """m^{d+1} (b_0...b_d)^{2m-2} for k = 0; the restricted analogue for k >= 1."""
    if k == 0:
        return _bmono(d, 1, **{f"b{i}": 2 * m - 2 for i in range(d + 1)}), m ** (d + 1)
    sign = (-1) ** ((m + 1) * d * d + d * k)
    exps = {f"b{i}": 2 * m - 2 for i in range(1, d)}
    exps["b0"] = m - 1 + k
    exps[f"b{d}"] = 2 * m - 2 - k
    return _bmono(d, 1, **exps), sign * m ** (d + 1)


def jacobian_det_check(d: int, m: int, k: int) -> Report:
    rep = Report("jacobian-det", {"d": d, "m": m, "k": k})
    det = jacobian_det(d, m, k)
    mono, want = jacobian_det_monomial(d, m, k)
    got = _coeff_of(det, mono)
    rep.details.update({"monomial": str(mono), "coefficient": got, "expected": want})
    if got != want:
        rep.failures.append({"monomial": str(mono), "coefficient": got, "expected": want})
    return rep


def jacobian_2_2_0_matches(J: JacobianBlocks | None = None) -> bool:
    """Compare with the worked 6x6 example (d = m = 2, k = 0)."""
    J = J or jacobian_blocks(2, 2, 0)
    g = MultiPoly.gens(a_vars(2) + b_vars(2))
    z = MultiPoly(tuple(g))
    a0, a1, a2, b0, b1, b2 = (g[v] for v in ("a0", "a1", "a2", "b0", "b1", "b2"))
    A = [[b0, b2, z], [z, -b1, z], [z, b0, b2]]
    C = [[a0, a2, z], [z, -a1, z], [z, a0, a2]]
    zero3 = [[z] * 3 for _ in range(3)]
    expected = [ra + rz for ra, rz in zip(A, zero3)] + \
               [rc + [x * 2 for x in ra] for rc, ra in zip(C, A)]
    return J.full() == expected


def matrix_composition_check(d: int, m: int, k: int, n: int, l: int) -> Report:
    """Composition law on the linear part: A_{m,k}(h_n(b)) A_{n,l}(b) = A_{mn,kn+l}(b).

    Matrices are taken in column form (transposes of ``A``), so that the
    G coefficients are the product with the column vector a. Substituting
    h_m(b) instead of h_n(b) is also recorded, under ``details``.
    """
    _check_dmk(d, m, k)
    _check_dmk(d, n, l)
    _guard(d, m * n)
    rep = Report("jacobian-matrix-composition", {"d": d, "m": m, "k": k, "n": n, "l": l})
    B = b_vars(d)

    def cols(M):
        return [list(r) for r in zip(*M)]

    def at(M, r):
        H = generic_gh(d, r, 0).H_coeffs()
        sub = {f"b{i}": H[i].with_vars(B) for i in range(d + 1)}
        return [[x.substitute_many(sub) for x in row] for row in M]

    def mul(X, Y):
        return [[sum((X[i][t] * Y[t][j] for t in range(d + 1)), MultiPoly(B)) for j in range(d + 1)]
                for i in range(d + 1)]

    Am, An = cols(jacobian_blocks(d, m, k).A), cols(jacobian_blocks(d, n, l).A)
    target = cols(jacobian_blocks(d, m * n, k * n + l).A)
    if mul(at(Am, n), An) != target:
        rep.failures.append("A_{m,k}(h_n(b)) A_{n,l}(b) differs from A_{mn,kn+l}(b)")
    rep.details["with_h_m"] = "holds" if mul(at(Am, m), An) == target else "fails"
    return rep


# ---------------------------------------------------------------------------
# report-only probes
# ---------------------------------------------------------------------------


def conjecture_probe(d: int, m: int, k: int) -> Report:
    """Report whether b_d^k det A'_k = (-1)^{(d+1)k} b_0^k det A'_0 and the row-shift relation.

    Never asserted: ``failures`` stays empty, outcomes go in ``details``.
    """
    _check_dmk(d, m, k)
    _guard(d, m)
    rep = Report("conjecture-probe", {"d": d, "m": m, "k": k})
    g = MultiPoly.gens(b_vars(d))
    lhs = g[f"b{d}"] ** k * det_A_restricted(d, m, k)
    rhs = g["b0"] ** k * det_A_restricted(d, m, 0) * ((-1) ** ((d + 1) * k))
    rep.details["det_identity"] = "holds" if lhs == rhs else "fails"
    if lhs != rhs:
        rep.details["det_identity_witness"] = {"lhs": str(lhs), "rhs": str(rhs)}
    # sign that actually relates the two sides, if any
    base = g["b0"] ** k * det_A_restricted(d, m, 0)
    rep.details["det_identity_observed_sign"] = 1 if lhs == base else (-1 if lhs == -base else None)
    if k == 0:
        full = det_A(d, m, 0)
        stated = (-g["b0"]) ** (m - 1) * det_A_restricted(d, m, 0)
        rep.details["det_A0_factorization"] = "holds" if full == stated else "fails"
        top = full.exact_divide(det_A_restricted(d, m, 0)) if full else None
        rep.details["det_A0_cofactor"] = str(top)
    if 1 <= m <= d + 1 and k + 1 < m:
        A0 = jacobian_blocks(d, m, k).A
        A1 = jacobian_blocks(d, m, k + 1).A
        top = A1[:d] == A0[1:]
        for label, r in (("zero_based", d + 1 - m), ("one_based", d - m)):
            ok = None
            if 0 <= r <= d:
                shifted = [MultiPoly(b_vars(d))] + A0[r][:d]
                ok = top and A1[d] == shifted
            rep.details[f"row_shift_{label}"] = {"row": r, "holds": ok}
    return rep
