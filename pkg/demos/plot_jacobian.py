"""
Jacobian of the coefficient map
===============================

The map (a, b) -> (G, H) has a block lower-triangular Jacobian. Its
determinant contains a monomial with a known coefficient, which shows
the map is generically nonsingular.
"""

from landen.jacobian import (
    conjecture_probe,
    det_A,
    jacobian_blocks,
    jacobian_det,
    jacobian_det_check,
    jacobian_latex,
)

J = jacobian_blocks(2, 2, 0)
print(jacobian_latex(J.full()))
print("det A =", det_A(2, 2, 0))
print("det J =", jacobian_det(2, 2, 0))

# the leading monomial certificate across a small grid
for d, m, k in [(2, 3, 0), (3, 2, 1), (3, 4, 2)]:
    rep = jacobian_det_check(d, m, k)
    print((d, m, k), rep.details["monomial"], rep.details["coefficient"])

# an observed relation between restricted determinants, reported only
print(conjecture_probe(3, 3, 1).details)
