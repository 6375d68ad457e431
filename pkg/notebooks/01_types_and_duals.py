"""
Types, duals and the Gray map
=============================

Build a few small additive codes, read off their types, dualise them and
look at their binary images.
"""

# %%
import numpy as np

from z2z4 import AdditiveCode, MixedMatrix, dual, dual_type
from z2z4.code import gray_image, min_distance

# %%
# A code is given by generator rows: binary part, then quaternary part.
G = MixedMatrix.from_lists(2, 3, [[1, 0, 1, 2, 3], [0, 1, 0, 2, 2], [1, 1, 2, 0, 0]])
C = AdditiveCode(G)
print("type of C:", C.ctype)
print("size:", len(C))

# %%
# The dual type follows from the type alone.
D = dual(C)
print("dual type (computed):", D.ctype)
print("dual type (formula): ", dual_type(C.ctype))
print("|C| * |C^perp| =", len(C) * len(D), "= 2 **", C.alpha + 2 * C.beta)

# %%
# The Gray image is a binary code of length alpha + 2 beta, usually nonlinear.
B = gray_image(C)
print(B)
print("minimum distance:", min_distance(C))

# %%
# Distance distribution of the image (pairwise, since it need not be linear).
diff = (B[:, None, :] ^ B[None, :, :]).sum(axis=2)
print(np.bincount(diff.ravel()))
