"""
Perfect and extended perfect codes
==================================

Construct the perfect families, certify them, and compute intersection
numbers between a code and permuted copies of it.
"""

# %%
from z2z4 import AdditiveCode, Monomial, apply_monomial, dual, eta
from z2z4.code import min_distance, perfect_covering
from z2z4.constructions import extended_perfect_z4_dual, perfect_z2z4_dual, perfect_z2z4_params

# %%
# Length-15 perfect codes with a nonzero binary part exist for r = 2..4.
for r in (2, 3, 4):
    C = AdditiveCode.from_parity_check(perfect_z2z4_dual(4, r))
    print(f"r={r}: dual type {perfect_z2z4_params(4, r)}  d={min_distance(C)}  perfect={perfect_covering(C)}")

# %%
# Extended perfect Z4-linear codes of length 16, one per delta.
codes = {d: AdditiveCode.from_parity_check(extended_perfect_z4_dual(4, d)) for d in (1, 2)}
for d, C in codes.items():
    print(f"delta={d}: dual type {dual(C).ctype}, |C| = 2^{C.log2_size}")

# %%
# Intersecting a code with a permuted copy shrinks it by a power of two.
C = codes[1]
for cycles in ([], [(1, 2)], [(1, 5), (2, 6)], [(1, 2, 5, 7), (3, 8)]):
    m = Monomial.from_cycles(0, 8, cycles)
    print(m, eta(C, apply_monomial(C, m)))
