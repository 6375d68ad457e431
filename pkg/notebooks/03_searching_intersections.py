"""
Searching for intersections
===========================

Enumerate every intersection type reached by permuting one code against
another, and look for one that cannot occur.
"""

# %%
from z2z4 import AdditiveCode, CodeType, Monomial
from z2z4.constructions import double_additive, paper_matrix
from z2z4.search import SearchTask, enumerate_types, replay, search

# %%
# The two length-8 quaternary codes of dual types (0,4;2,1) and (0,4;0,2).
H1 = AdditiveCode.from_parity_check(paper_matrix("qlpc-t3-H1"))
H2 = AdditiveCode.from_parity_check(paper_matrix("qlpc-t3-H2"))
for name, (A, B) in {"H1/H1": (H1, H1), "H2/H2": (H2, H2), "H1/H2": (H1, H2)}.items():
    print(name, [str(t) for t in enumerate_types(A, B)])

# %%
# Allowing sign flips as well reaches further types.
print([str(t) for t in enumerate_types(H2, H2, use_signs=True)])

# %%
# The extended perfect code of dual type (8,4;3,1;3).  Its intersections
# with permuted copies never have dual type (8,4;6,1;3).
C = AdditiveCode.from_parity_check(double_additive(paper_matrix("sec4-exbeta4-H2")))
out = search(SearchTask(C, C, CodeType(8, 4, 6, 1, 3), mode="exhaustive"))
print(out)

# %%
# A 7-cycle on the binary coordinates gives (8,4;6,1;6) instead.
w = replay(C, C, Monomial.from_cycles(8, 4, [(1, 8, 7, 6, 5, 4, 3)]))
print(w.line())

# %%
# Randomized search reports a seeded witness that replays exactly.
w = search(SearchTask(C, C, CodeType(8, 4, 5, 1, 5), budget=20_000, seed=1))
print(w.line(), w.replay(C, C))
