"""
Transforming a concrete rational function
=========================================

Apply the transform to (z^2 + 1)/(z^2 + z + 1), then check it against the
power series description: the output's coefficients are every m-th
coefficient of the input's expansion, starting at index k.
"""

from landen import RatFunc, laurent_expand, transform
from landen.core import transform_detailed
from landen.exactrings import GF

phi = RatFunc([1, 0, 1], [1, 1, 1], 2)
psi = transform(phi, 2, 0)
print("input :", phi)
print("output:", psi)

# compare series: psi(w) should equal the sum of c_{2j} w^j
s_phi = laurent_expand(phi, 12)
s_psi = laurent_expand(psi, 6)
print("even coefficients of phi:", [str(s_phi.coeff(2 * j)) for j in range(6)])
print("coefficients of psi     :", [str(s_psi.coeff(j)) for j in range(6)])

# the degree can drop; z^5 with m = 2, k = 1 collapses to z^2
res = transform_detailed(RatFunc([1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 1], 5), 2, 1)
print("z^5 ->", res.value, "degree preserved:", res.degree_preserved)

# the same input over GF(5)
print("over GF(5):", transform(RatFunc([1, 0, 1], [1, 1, 1], 2, GF(5)), 2, 0))
