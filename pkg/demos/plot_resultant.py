"""
Resultant of the transformed pair
=================================

Res(G, H) factors through Res(a, b) and a ratio of discriminants. The
power of b_0 in that factorization is m - 1 + k; with m - 1 alone the
two sides differ by exactly b_0^k.
"""

from landen.elimination import disc_ratio, special_pair_resultant, verify_resultant_identity

# Disc(H) / Disc(b) for quadratics and m = 2
print("disc ratio d=2, m=2:", disc_ratio(2, 2))

for k in range(3):
    short = verify_resultant_identity(2, 3, k, "symbolic")
    fixed = verify_resultant_identity(2, 3, k, "symbolic", corrected=True)
    print(f"k={k}: b0^(m-1) holds={bool(short)}  b0^(m-1+k) holds={bool(fixed)}",
          short.failures)

# the sign comes from a single pair: a = z^d, b = (z - 1)^d
print("special pair d=2, m=2:", special_pair_resultant(2, 2, 0))
