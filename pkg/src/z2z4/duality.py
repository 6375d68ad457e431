"""Mixed inner product, dual codes and the dual-type formula."""

from __future__ import annotations

import numpy as np

from .algebra import CodeType, MixedMatrix, MixedVector
from .code import AdditiveCode


def inner_product(u: MixedVector, v: MixedVector) -> int:
    """2 * (binary dot) + (quaternary dot), in Z4."""
    if u.shape != v.shape:
        raise ValueError(f"shape mismatch: {u.shape} vs {v.shape}")
    s = 2 * sum(a * b for a, b in zip(u.bin, v.bin))
    s += sum(a * b for a, b in zip(u.quat, v.quat))
    return s % 4


def weighted_matrix(M: MixedMatrix) -> np.ndarray:
    """``M . J`` as a Z4 matrix: binary columns doubled, quaternary kept."""
    return np.hstack([2 * M.bin_array(), M.quat_array()]) % 4


def z4_kernel(A: np.ndarray) -> np.ndarray:
    """Generators (as rows) of ``{x in Z4^n : A x = 0}``.

    Diagonalises ``A`` with unimodular row and column operations; units are
    pivoted first, then 2s.  The kernel of the diagonal form is read off and
    pulled back through the accumulated column transform.
    """
    A = np.array(A, dtype=np.int64) % 4
    k, n = A.shape
    V = np.eye(n, dtype=np.int64)
    diag = []
    pos = 0
    for want in (1, 2):
        while pos < min(k, n):
            block = A[pos:, pos:]
            hit = np.argwhere(block % 2 == 1) if want == 1 else np.argwhere(block == 2)
            if hit.size == 0:
                break
            i, j = hit[0] + pos
            A[[pos, i]] = A[[i, pos]]
            A[:, [pos, j]] = A[:, [j, pos]]
            V[:, [pos, j]] = V[:, [j, pos]]
            if want == 1 and A[pos, pos] == 3:
                A[pos] = (3 * A[pos]) % 4
            p = A[pos, pos]
            for r in range(k):
                if r != pos and A[r, pos]:
                    f = A[r, pos] // p
                    A[r] = (A[r] - f * A[pos]) % 4
            for c in range(pos + 1, n):
                if A[pos, c]:
                    f = A[pos, c] // p
                    A[:, c] = (A[:, c] - f * A[:, pos]) % 4
                    V[:, c] = (V[:, c] - f * V[:, pos]) % 4
            diag.append(int(p))
            pos += 1
    gens = [(2 * V[:, i]) % 4 for i, d in enumerate(diag) if d == 2]
    gens += [V[:, i] for i in range(len(diag), n)]
    return np.array(gens, dtype=np.int64).reshape(len(gens), n)


def dual(C: AdditiveCode) -> AdditiveCode:
    """The annihilator of ``C`` under :func:`inner_product`."""
    a, b = C.shape
    if len(C.gens) == 0:
        return AdditiveCode.ambient(a, b)
    K = z4_kernel(weighted_matrix(C.gens))
    return AdditiveCode(MixedMatrix.from_arrays(K[:, :a] % 2, K[:, a:]))


def dual_type(t: CodeType) -> CodeType:
    """Type of the dual: (a, b; a + g - 2k, b - g - d + k; a - k)."""
    t.validate()
    return CodeType(
        t.alpha,
        t.beta,
        t.alpha + t.gamma - 2 * t.kappa,
        t.beta - t.gamma - t.delta + t.kappa,
        t.alpha - t.kappa,
    ).validate()
