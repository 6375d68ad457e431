"""
Vectorised type computation over batches of monomial images.

A batch holds N variants of the same stacked matrix; each row is three
int64 arrays ``(b, lo, hi)`` of length N (binary bits, low and high planes
of the quaternary entries).  :func:`batch_type` returns gamma, delta and
kappa of the generated group for all N variants at once.
"""

from __future__ import annotations

import numpy as np


def batch_type(rows, alpha: int, beta: int):
    """Arrays ``(gamma, delta, kappa)`` for a batch of packed row stacks."""
    if alpha + beta > 62:
        raise ValueError("batched bit planes limited to alpha + beta <= 62")
    n = rows[0][0].shape[0] if rows else 0
    zero = np.zeros(n, dtype=np.int64)
    plo = [zero] * beta
    phi = [zero] * beta
    pb = [zero] * beta
    pval = [np.zeros(n, dtype=bool) for _ in range(beta)]
    dvecs = []
    for b, lo, hi in rows:
        b = np.broadcast_to(b, (n,)).copy()
        lo = np.broadcast_to(lo, (n,)).copy()
        hi = np.broadcast_to(hi, (n,)).copy()
        placed = np.zeros(n, dtype=bool)
        dv = np.zeros(n, dtype=np.int64)
        for j in range(beta):
            m = ((lo >> j) & 1).astype(bool) & ~placed
            if not m.any():
                continue
            ex = m & pval[j]
            if ex.any():
                hi = np.where(ex, hi ^ phi[j] ^ (lo & plo[j]), hi)
                lo = np.where(ex, lo ^ plo[j], lo)
                b = np.where(ex, b ^ pb[j], b)
            new = m & ~pval[j]
            if new.any():
                plo[j] = np.where(new, lo, plo[j])
                phi[j] = np.where(new, hi, phi[j])
                pb[j] = np.where(new, b, pb[j])
                pval[j] = pval[j] | new
                dv = np.where(new, lo, dv)
                placed |= new
        dvecs.append(np.where(placed, dv, (b << beta) | hi))
    delta = np.sum(pval, axis=0) if beta else zero.copy()

    nbits = alpha + beta
    basis = [None] * nbits
    for x in dvecs:
        x = x.copy()
        for bit in range(nbits - 1, -1, -1):
            m = ((x >> bit) & 1).astype(bool)
            if not m.any():
                continue
            if basis[bit] is None:
                basis[bit] = np.where(m, x, 0)
                x = np.where(m, 0, x)
                continue
            have = basis[bit] != 0
            ex = m & have
            x = np.where(ex, x ^ basis[bit], x)
            new = m & ~have
            if new.any():
                basis[bit] = np.where(new, x, basis[bit])
                x = np.where(new, 0, x)
    rank = zero.copy()
    kappa = zero.copy()
    for bit, v in enumerate(basis):
        if v is None:
            continue
        nz = (v != 0).astype(np.int64)
        rank += nz
        if bit >= beta:
            kappa += nz
    return rank - delta, delta, kappa


def permute_bits(value: int, perms: np.ndarray) -> np.ndarray:
    """Move bit i of ``value`` to bit ``perms[:, i]`` for every row of perms."""
    out = np.zeros(perms.shape[0], dtype=np.int64)
    i = 0
    while value:
        if value & 1:
            out |= np.left_shift(np.int64(1), perms[:, i])
        value >>= 1
        i += 1
    return out


def apply_batch(packed_rows, bin_perms: np.ndarray, quat_perms: np.ndarray, sign_masks: np.ndarray):
    """Images of packed rows under a batch of monomials.

    ``bin_perms`` (N, alpha) and ``quat_perms`` (N, beta) give target
    positions within each block; ``sign_masks`` (N,) marks negated
    quaternary positions after the move.
    """
    out = []
    for b, lo, hi in packed_rows:
        nb = permute_bits(b, bin_perms)
        nlo = permute_bits(lo, quat_perms)
        nhi = permute_bits(hi, quat_perms) ^ (nlo & sign_masks)
        out.append((nb, nlo, nhi))
    return out
