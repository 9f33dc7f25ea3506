"""
The denominator map and root powers
===================================

The denominator of the transform depends only on b. Written in terms of
the roots of b, it raises every root to the m-th power.
"""

from landen.symfun import conjugacy_check, h_m_affine, h_m_projective, sigma_bar

roots = [1, 2]
b = sigma_bar(roots)  # z^2 - 3z + 2
print("b coefficients:", b)
print("h_2(b)        :", h_m_affine(b, 2))
print("roots squared :", sigma_bar([r * r for r in roots]))
print("conjugacy on random-ish roots:", all(conjugacy_check(u, 3) for u in ([1, -2, 5], [0, 3], [7])))

# on projective space the map is defined everywhere except b = 0
print(h_m_projective([0, 1, 1], 2))
