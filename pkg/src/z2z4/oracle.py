"""
Brute-force references for small ambient spaces.

Everything here works on explicit sets of vectors and never touches the
reduction or kernel code, so it can be used to check them.
"""

from __future__ import annotations

import itertools

import numpy as np

from .algebra import MixedMatrix, MixedVector

MAX_AMBIENT_LOG2 = 16


def _ambient_arrays(alpha: int, beta: int):
    if alpha + 2 * beta > MAX_AMBIENT_LOG2:
        raise ValueError(f"ambient space 2^{alpha + 2 * beta} is too large for brute force")
    B = np.array(list(itertools.product((0, 1), repeat=alpha)), dtype=np.int64).reshape(1 << alpha, alpha)
    Q = np.array(list(itertools.product(range(4), repeat=beta)), dtype=np.int64).reshape(1 << (2 * beta), beta)
    nb, nq = B.shape[0], Q.shape[0]
    return np.repeat(B, nq, axis=0), np.tile(Q, (nb, 1))


def _key(bin, quat) -> tuple:
    return tuple(int(x) for x in bin), tuple(int(x) for x in quat)


def codeword_set(M: MixedMatrix) -> frozenset:
    """All Z-combinations of the rows of M, grown by closure."""
    a, b = M.shape
    words = {_key([0] * a, [0] * b)}
    for row in M:
        frontier = set(words)
        while frontier:
            new = set()
            for bin, quat in frontier:
                w = _key([(x + y) % 2 for x, y in zip(bin, row.bin)], [(x + y) % 4 for x, y in zip(quat, row.quat)])
                if w not in words:
                    words.add(w)
                    new.add(w)
            frontier = new
    return frozenset(words)


def annihilator_set(M: MixedMatrix) -> frozenset:
    """Every ambient vector orthogonal to all rows of M."""
    a, b = M.shape
    B, Q = _ambient_arrays(a, b)
    ok = np.ones(B.shape[0], dtype=bool)
    for row in M:
        ip = 2 * (B @ np.array(row.bin, dtype=np.int64)) + Q @ np.array(row.quat, dtype=np.int64)
        ok &= (ip % 4) == 0
    return frozenset(_key(x, y) for x, y in zip(B[ok], Q[ok]))


def type_of_set(words, alpha: int, beta: int) -> tuple:
    """(gamma, delta, kappa) read off an explicit subgroup."""
    n = len(words)
    order2 = [w for w in words if all(x % 2 == 0 for x in w[1])]
    log_all = n.bit_length() - 1
    log_2 = len(order2).bit_length() - 1
    delta = log_all - log_2
    gamma = log_2 - delta
    kappa = len({w[0] for w in order2}).bit_length() - 1
    return gamma, delta, kappa


def random_matrix(rng: np.random.Generator, alpha: int, beta: int, rows: int | None = None, density: float | None = None) -> MixedMatrix:
    """Random generators; sparse draws make small and degenerate codes common."""
    if rows is None:
        rows = int(rng.integers(0, alpha + beta + 2))
    if density is None:
        density = float(rng.uniform(0.15, 1.0))
    out = []
    for _ in range(rows):
        bin = (rng.integers(0, 2, alpha) * (rng.random(alpha) < density)).tolist()
        quat = (rng.integers(0, 4, beta) * (rng.random(beta) < density)).tolist()
        if rng.random() < 0.25:
            quat = [2 * (x % 2) for x in quat]
        out.append(MixedVector.from_ints(bin, quat))
    return MixedMatrix(alpha, beta, out)
