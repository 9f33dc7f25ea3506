"""
The universal numerator and denominator
=======================================

Every degree-d map a(z)/b(z) has a transform G/H whose coefficients are
integer polynomials in the a_i and b_i. This script prints a few of them.
"""

from landen.core import generic_gh

# d = 2, m = 2: the plain averaging transform on quadratic maps
pair = generic_gh(2, 2, 0)
print(pair.to_text())

# shifting by k = 1 picks out the odd part instead, and the numerator
# loses its top coefficient
print(generic_gh(2, 2, 1).to_text())

# the same pair as LaTeX, ready to paste into a note
print(generic_gh(2, 2, 1).to_latex())

# m = 1 gives back the input map
print(generic_gh(1, 1, 0).to_text())
