"""
Exact arithmetic on vectors and matrices over Z2^alpha x Z4^beta.

Binary coordinates hold values in {0, 1} and quaternary coordinates hold
values in {0, 1, 2, 3}.  Binary entries are never embedded into Z4 here;
the inner product in :mod:`z2z4.duality` supplies the doubling.

Besides the tuple/numpy representation there is a bit-packed one used by
the search loops: a row becomes three Python ints ``(b, lo, hi)`` holding
the binary bits and the low/high bit planes of the quaternary entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True, order=True)
class CodeType:
    """The type (alpha, beta; gamma, delta; kappa) of an additive code."""

    alpha: int
    beta: int
    gamma: int
    delta: int
    kappa: int = 0

    def __post_init__(self):
        if min(self.alpha, self.beta, self.gamma, self.delta, self.kappa) < 0:
            raise ValueError(f"negative parameter in {self}")

    def __str__(self):
        return f"({self.alpha},{self.beta};{self.gamma},{self.delta};{self.kappa})"

    @property
    def log2_size(self) -> int:
        return self.gamma + 2 * self.delta

    @property
    def size(self) -> int:
        return 1 << self.log2_size

    def is_valid(self) -> bool:
        return (
            self.kappa <= min(self.gamma, self.alpha)
            and self.delta <= self.beta
            and self.gamma + self.delta <= self.alpha + self.beta
        )

    def validate(self) -> "CodeType":
        if not self.is_valid():
            raise ValueError(f"parameters out of range: {self}")
        return self


@dataclass(frozen=True)
class MixedVector:
    """An element of Z2^alpha x Z4^beta."""

    bin: tuple
    quat: tuple

    def __post_init__(self):
        b = tuple(int(x) for x in self.bin)
        q = tuple(int(x) for x in self.quat)
        if any(x not in (0, 1) for x in b):
            raise ValueError(f"binary entries must be 0/1, got {b}")
        if any(x not in (0, 1, 2, 3) for x in q):
            raise ValueError(f"quaternary entries must be in 0..3, got {q}")
        object.__setattr__(self, "bin", b)
        object.__setattr__(self, "quat", q)

    @classmethod
    def zero(cls, alpha: int, beta: int) -> "MixedVector":
        return cls((0,) * alpha, (0,) * beta)

    @classmethod
    def from_ints(cls, bin, quat) -> "MixedVector":
        return cls(tuple(int(x) % 2 for x in bin), tuple(int(x) % 4 for x in quat))

    @property
    def alpha(self) -> int:
        return len(self.bin)

    @property
    def beta(self) -> int:
        return len(self.quat)

    @property
    def shape(self) -> tuple:
        return (len(self.bin), len(self.quat))

    def _check(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "MixedVector") -> "MixedVector":
        self._check(other)
        return MixedVector(
            tuple((a + b) % 2 for a, b in zip(self.bin, other.bin)),
            tuple((a + b) % 4 for a, b in zip(self.quat, other.quat)),
        )

    def __neg__(self) -> "MixedVector":
        return MixedVector(self.bin, tuple((-x) % 4 for x in self.quat))

    def __sub__(self, other: "MixedVector") -> "MixedVector":
        return self + (-other)

    def scale(self, k: int) -> "MixedVector":
        return MixedVector(
            tuple((k * x) % 2 for x in self.bin), tuple((k * x) % 4 for x in self.quat)
        )

    def __rmul__(self, k: int) -> "MixedVector":
        return self.scale(k)

    def is_zero(self) -> bool:
        return not any(self.bin) and not any(self.quat)

    def packed(self) -> tuple:
        return pack_row(self.bin, self.quat)

    def __str__(self):
        b = "".join(map(str, self.bin))
        q = "".join(map(str, self.quat))
        if self.bin and self.quat:
            return f"{b}|{q}"
        return b + q


def element_order(v: MixedVector) -> int:
    """Smallest k in {1, 2, 4} with k*v = 0."""
    if any(x % 2 for x in v.quat):
        return 4
    if v.is_zero():
        return 1
    return 2


class MixedMatrix:
    """An ordered list of rows, all in Z2^alpha x Z4^beta."""

    __slots__ = ("alpha", "beta", "rows")

    def __init__(self, alpha: int, beta: int, rows: Iterable[MixedVector] = ()):
        rows = tuple(rows)
        for r in rows:
            if r.shape != (alpha, beta):
                raise ValueError(f"row shape {r.shape} != {(alpha, beta)}")
        self.alpha = alpha
        self.beta = beta
        self.rows = rows

    @classmethod
    def from_lists(cls, alpha: int, beta: int, rows: Sequence) -> "MixedMatrix":
        """Build from rows given as flat sequences of length alpha+beta."""
        out = []
        for r in rows:
            r = list(r)
            if len(r) != alpha + beta:
                raise ValueError(f"row {r} has length {len(r)}, expected {alpha + beta}")
            out.append(MixedVector.from_ints(r[:alpha], r[alpha:]))
        return cls(alpha, beta, out)

    @classmethod
    def from_arrays(cls, B, Q) -> "MixedMatrix":
        B = np.asarray(B, dtype=np.int64)
        Q = np.asarray(Q, dtype=np.int64)
        if B.ndim != 2 or Q.ndim != 2 or B.shape[0] != Q.shape[0]:
            raise ValueError("binary and quaternary blocks must be 2-D with equal row counts")
        rows = [MixedVector.from_ints(b, q) for b, q in zip(B, Q)]
        return cls(B.shape[1], Q.shape[1], rows)

    @property
    def shape(self) -> tuple:
        return (self.alpha, self.beta)

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def __eq__(self, other):
        return (
            isinstance(other, MixedMatrix)
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        return f"MixedMatrix(alpha={self.alpha}, beta={self.beta}, rows={len(self.rows)})"

    def __str__(self):
        return "\n".join(str(r) for r in self.rows)

    def bin_array(self) -> np.ndarray:
        return np.array([r.bin for r in self.rows], dtype=np.int64).reshape(len(self.rows), self.alpha)

    def quat_array(self) -> np.ndarray:
        return np.array([r.quat for r in self.rows], dtype=np.int64).reshape(len(self.rows), self.beta)

    def stack(self, other: "MixedMatrix") -> "MixedMatrix":
        """Vertical concatenation (the H1 || H2 of two parity-check matrices)."""
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        return MixedMatrix(self.alpha, self.beta, self.rows + other.rows)

    def packed(self) -> list:
        return [r.packed() for r in self.rows]


# ---------------------------------------------------------------------------
# canonical reduction
# ---------------------------------------------------------------------------

def _z2_rref(M: np.ndarray):
    """Reduced row echelon form over Z2; returns (nonzero rows, pivot columns)."""
    M = (M % 2).astype(np.int64)
    rows, cols = M.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hits = np.nonzero(M[r:, c])[0]
        if hits.size == 0:
            continue
        p = r + hits[0]
        if p != r:
            M[[r, p]] = M[[p, r]]
        others = np.nonzero(M[:, c])[0]
        for o in others:
            if o != r:
                M[o] ^= M[r]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def z2_rank(M) -> int:
    M = np.asarray(M, dtype=np.int64)
    if M.size == 0:
        return 0
    return len(_z2_rref(M)[1])


def standard_reduce(M: MixedMatrix):
    """Canonical generators ``(rows4, rows2)`` of the code spanned by ``M``.

    Pivots are taken first on units in quaternary columns (left to right,
    normalised to 1), then on 2s in quaternary columns, then on 1s in binary
    columns; all other entries in a pivot column are cleared as far as the
    pivot order allows (to {0, 1} above a 2-pivot).
    """
    alpha, beta = M.shape
    if len(M) == 0:
        return [], []
    B = M.bin_array() % 2
    Q = M.quat_array() % 4
    rem = list(range(len(M)))
    piv4 = []  # (row index, column)
    for c in range(beta):
        cand = [r for r in rem if Q[r, c] % 2]
        if not cand:
            continue
        p = cand[0]
        rem.remove(p)
        if Q[p, c] == 3:
            Q[p] = (3 * Q[p]) % 4
        for x in rem + [i for i, _ in piv4]:
            f = Q[x, c]
            if f:
                Q[x] = (Q[x] - f * Q[p]) % 4
                B[x] = (B[x] + f * B[p]) % 2
        piv4.append((p, c))

    rows4_Q = np.array([Q[p] for p, _ in piv4], dtype=np.int64).reshape(len(piv4), beta)
    rows4_B = np.array([B[p] for p, _ in piv4], dtype=np.int64).reshape(len(piv4), alpha)

    # remaining rows have only even quaternary entries
    Z = np.hstack([Q[rem] // 2, B[rem]]) if rem else np.zeros((0, beta + alpha), dtype=np.int64)
    R, pivcols = _z2_rref(Z) if len(rem) else (Z, [])
    rows2_Q = 2 * R[:, :beta]
    rows2_B = R[:, beta:]

    for i, pc in enumerate(pivcols):
        if pc < beta:
            hit = rows4_Q[:, pc] >= 2
        else:
            hit = rows4_B[:, pc - beta] == 1
        if hit.any():
            rows4_Q[hit] = (rows4_Q[hit] + rows2_Q[i]) % 4
            rows4_B[hit] = (rows4_B[hit] + rows2_B[i]) % 2

    rows4 = [MixedVector.from_ints(b, q) for b, q in zip(rows4_B, rows4_Q)]
    rows2 = [MixedVector.from_ints(b, q) for b, q in zip(rows2_B, rows2_Q)]
    return rows4, rows2


def canonical_matrix(M: MixedMatrix) -> MixedMatrix:
    rows4, rows2 = standard_reduce(M)
    return MixedMatrix(M.alpha, M.beta, rows4 + rows2)


def type_from_reduced(alpha: int, beta: int, rows4, rows2) -> CodeType:
    kappa = 0
    if alpha and rows2:
        kappa = z2_rank(np.array([r.bin for r in rows2], dtype=np.int64))
    return CodeType(alpha, beta, len(rows2), len(rows4), kappa)


def compute_type(M: MixedMatrix) -> CodeType:
    """Type (alpha, beta; gamma, delta; kappa) of the code generated by ``M``."""
    rows4, rows2 = standard_reduce(M)
    return type_from_reduced(M.alpha, M.beta, rows4, rows2)


# ---------------------------------------------------------------------------
# bit-packed fast path
# ---------------------------------------------------------------------------

def pack_row(bin, quat) -> tuple:
    b = lo = hi = 0
    for i, x in enumerate(bin):
        if x:
            b |= 1 << i
    for j, x in enumerate(quat):
        if x & 1:
            lo |= 1 << j
        if x & 2:
            hi |= 1 << j
    return b, lo, hi


def unpack_row(packed, alpha: int, beta: int) -> MixedVector:
    b, lo, hi = packed
    return MixedVector(
        tuple((b >> i) & 1 for i in range(alpha)),
        tuple(((lo >> j) & 1) | (((hi >> j) & 1) << 1) for j in range(beta)),
    )


def packed_type(rows, beta: int):
    """``(gamma, delta, kappa)`` of the group generated by packed rows.

    delta is the Z2-rank of the rows reduced mod 2; the order-two subgroup is
    spanned by the rows whose low plane cancels plus twice the pivot rows,
    and its dimension and binary-projection rank give gamma + delta and
    kappa.
    """
    pivots = {}  # lowest set bit of lo -> (b, lo, hi)
    dvecs = []
    for b, lo, hi in rows:
        while lo:
            low = lo & -lo
            p = pivots.get(low)
            if p is None:
                pivots[low] = (b, lo, hi)
                dvecs.append(lo << 0)  # 2*row: hi plane = lo plane, b = 0
                break
            pb, plo, phi = p
            hi ^= phi ^ (lo & plo)
            lo ^= plo
            b ^= pb
        else:
            if b or hi:
                dvecs.append((b << beta) | hi)
    delta = len(pivots)
    basis = {}
    kappa = 0
    for x in dvecs:
        while x:
            top = x.bit_length()
            y = basis.get(top)
            if y is None:
                basis[top] = x
                if top > beta:
                    kappa += 1
                break
            x ^= y
    return len(basis) - delta, delta, kappa


def packed_add(u, v):
    ub, ulo, uhi = u
    vb, vlo, vhi = v
    return ub ^ vb, ulo ^ vlo, uhi ^ vhi ^ (ulo & vlo)


def packed_neg(u):
    b, lo, hi = u
    return b, lo, hi ^ lo
