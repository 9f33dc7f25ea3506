"""
Composing transforms
====================

Transforms compose like the matrices (m 0; k 1). This script checks the
rule on random maps and shows the matrix bookkeeping.
"""

from landen.core import MonoidElem, compose_check

# (m, k) = (2, 1) after (n, l) = (3, 2) should act like (6, 5)
x, y = MonoidElem(2, 1), MonoidElem(3, 2)
print(x * y)

# confirm on 20 random quadratic maps
rep = compose_check(2, 2, 1, 3, 2, "sampled", trials=20, seed=1)
print(rep.identity, "passed:", bool(rep))

# and symbolically, over the generic coefficients
print("symbolic:", bool(compose_check(2, 2, 0, 3, 1, "symbolic")))

# the k = 0 transforms commute with each other
print("commute:", MonoidElem(2, 0) * MonoidElem(3, 0) == MonoidElem(3, 0) * MonoidElem(2, 0))
