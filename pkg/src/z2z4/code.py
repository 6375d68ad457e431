"""Additive codes: membership, enumeration, Gray map, distance and monomial maps."""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

import numpy as np

from .algebra import (
    MixedMatrix,
    MixedVector,
    canonical_matrix,
    standard_reduce,
    type_from_reduced,
)
from .config import GuardExceeded, settings

# Gray images of 0, 1, 2, 3
GRAY = ((0, 0), (0, 1), (1, 1), (1, 0))
_GRAY_ARR = np.array(GRAY, dtype=np.uint8)
_LEE = np.array([0, 1, 2, 1], dtype=np.int64)


class AdditiveCode:
    """A subgroup of Z2^alpha x Z4^beta held as canonical generators."""

    __slots__ = ("gens", "ctype", "rows4", "rows2", "_piv4", "_piv2")

    def __init__(self, generators: MixedMatrix):
        rows4, rows2 = standard_reduce(generators)
        a, b = generators.shape
        self.rows4 = tuple(rows4)
        self.rows2 = tuple(rows2)
        self.gens = MixedMatrix(a, b, self.rows4 + self.rows2)
        self.ctype = type_from_reduced(a, b, rows4, rows2)
        self._piv4 = tuple(next(j for j, x in enumerate(r.quat) if x % 2) for r in rows4)
        piv2 = []
        for r in rows2:
            j = next((j for j, x in enumerate(r.quat) if x), None)
            piv2.append(("q", j) if j is not None else ("b", r.bin.index(1)))
        self._piv2 = tuple(piv2)

    @classmethod
    def zero(cls, alpha: int, beta: int) -> "AdditiveCode":
        return cls(MixedMatrix(alpha, beta))

    @classmethod
    def ambient(cls, alpha: int, beta: int) -> "AdditiveCode":
        rows = [MixedVector.from_ints([int(i == j) for i in range(alpha)], [0] * beta) for j in range(alpha)]
        rows += [MixedVector.from_ints([0] * alpha, [int(i == j) for i in range(beta)]) for j in range(beta)]
        return cls(MixedMatrix(alpha, beta, rows))

    @classmethod
    def from_parity_check(cls, H: MixedMatrix) -> "AdditiveCode":
        """The code annihilated by every row of ``H``."""
        from .duality import dual

        return dual(cls(H))

    @property
    def alpha(self) -> int:
        return self.gens.alpha

    @property
    def beta(self) -> int:
        return self.gens.beta

    @property
    def shape(self) -> tuple:
        return self.gens.shape

    @property
    def log2_size(self) -> int:
        return self.ctype.log2_size

    def __len__(self):
        return self.ctype.size

    def __eq__(self, other):
        return isinstance(other, AdditiveCode) and self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def __repr__(self):
        return f"AdditiveCode{self.ctype}"

    def __contains__(self, v):
        return contains(self, v)

    def parity_check(self) -> MixedMatrix:
        from .duality import dual

        return dual(self).gens


def contains(C: AdditiveCode, v: MixedVector) -> bool:
    """Membership by reduction against the canonical pivots."""
    if v.shape != C.shape:
        raise ValueError(f"shape mismatch: {v.shape} vs {C.shape}")
    q = list(v.quat)
    b = list(v.bin)
    for row, c in zip(C.rows4, C._piv4):
        f = q[c]
        if f:
            q = [(x - f * y) % 4 for x, y in zip(q, row.quat)]
            b = [(x + f * y) % 2 for x, y in zip(b, row.bin)]
    if any(x % 2 for x in q):
        return False
    for row, (kind, c) in zip(C.rows2, C._piv2):
        hit = q[c] if kind == "q" else b[c]
        if hit:
            q = [(x + y) % 4 for x, y in zip(q, row.quat)]
            b = [(x + y) % 2 for x, y in zip(b, row.bin)]
    return not any(q) and not any(b)


def _check_guard(C: AdditiveCode):
    if C.log2_size > settings.guard_log2:
        raise GuardExceeded(
            f"code of size 2^{C.log2_size} exceeds enumeration guard 2^{settings.guard_log2}"
        )


def codeword_arrays(C: AdditiveCode, chunk: int = 1 << 16) -> Iterator[tuple]:
    """Yield ``(B, Q)`` numpy blocks covering every codeword exactly once."""
    _check_guard(C)
    a, b = C.shape
    rows = C.rows4 + C.rows2
    GB = np.array([r.bin for r in rows], dtype=np.int64).reshape(len(rows), a)
    GQ = np.array([r.quat for r in rows], dtype=np.int64).reshape(len(rows), b)
    radices = [4] * len(C.rows4) + [2] * len(C.rows2)
    total = C.ctype.size
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        coeff = np.empty((idx.size, len(radices)), dtype=np.int64)
        rest = idx
        for k in range(len(radices) - 1, -1, -1):
            coeff[:, k] = rest % radices[k]
            rest = rest // radices[k]
        yield (coeff @ GB) % 2, (coeff @ GQ) % 4


def enumerate_codewords(C: AdditiveCode) -> Iterator[MixedVector]:
    """Every codeword exactly once (Z4 combinations of rows4, Z2 of rows2)."""
    for B, Q in codeword_arrays(C):
        for b, q in zip(B, Q):
            yield MixedVector(tuple(b), tuple(q))


def gray_map(v: MixedVector) -> tuple:
    out = list(v.bin)
    for x in v.quat:
        out.extend(GRAY[x])
    return tuple(out)


def gray_arrays(B: np.ndarray, Q: np.ndarray) -> np.ndarray:
    """Row-wise Gray images of a block of codewords."""
    G = _GRAY_ARR[Q].reshape(Q.shape[0], 2 * Q.shape[1])
    return np.hstack([B.astype(np.uint8), G])


def gray_image(C: AdditiveCode) -> np.ndarray:
    return np.vstack([gray_arrays(B, Q) for B, Q in codeword_arrays(C)])


def lee_weight(v: MixedVector) -> int:
    return sum(v.bin) + sum(int(_LEE[x]) for x in v.quat)


def min_distance(C: AdditiveCode) -> int:
    """Minimum Hamming distance of the Gray image, via Lee weights.

    Codes inside the enumeration guard are enumerated; larger ones are
    handled by testing every Gray-domain pattern of weight 1, 2, ... for
    membership until a codeword turns up.
    """
    if C.log2_size == 0:
        raise ValueError("zero code has no minimum distance")
    if C.log2_size > settings.guard_log2:
        return _min_distance_by_spheres(C)
    best = None
    for B, Q in codeword_arrays(C):
        w = B.sum(axis=1) + _LEE[Q].sum(axis=1)
        w = w[w > 0]
        if w.size:
            m = int(w.min())
            best = m if best is None else min(best, m)
    return best


# inverse Gray map indexed by 2*x + y
_UNGRAY = np.array([0, 1, 3, 2], dtype=np.int64)


def _min_distance_by_spheres(C: AdditiveCode) -> int:
    from math import comb

    from .duality import dual, weighted_matrix

    a, b = C.shape
    n = a + 2 * b
    H = weighted_matrix(dual(C).gens)
    for w in range(1, n + 1):
        if comb(n, w) > (1 << settings.guard_log2):
            raise GuardExceeded(f"too many weight-{w} patterns in length {n}")
        supports = np.array(list(itertools.combinations(range(n), w)), dtype=np.int64)
        X = np.zeros((supports.shape[0], n), dtype=np.int64)
        np.put_along_axis(X, supports, 1, axis=1)
        Q = _UNGRAY[2 * X[:, a::2][:, :b] + X[:, a + 1::2][:, :b]]
        V = np.hstack([X[:, :a], Q])
        if (((V @ H.T) % 4) == 0).all(axis=1).any():
            return w
    raise AssertionError("unreachable: the all-zero code was excluded")


class Monomial:
    """A split-preserving coordinate permutation followed by sign flips.

    ``perm[i]`` is the 0-based position that coordinate ``i`` moves to;
    ``signs`` holds 0-based global positions (all quaternary) negated after
    the move.
    """

    __slots__ = ("alpha", "beta", "perm", "signs")

    def __init__(self, alpha: int, beta: int, perm=None, signs: Iterable[int] = ()):
        n = alpha + beta
        perm = tuple(range(n)) if perm is None else tuple(int(p) for p in perm)
        if sorted(perm) != list(range(n)):
            raise ValueError(f"not a permutation of {n} coordinates: {perm}")
        for i, p in enumerate(perm):
            if (i < alpha) != (p < alpha):
                raise ValueError(
                    f"coordinate {i + 1} maps to {p + 1}, crossing the binary/quaternary split"
                )
        signs = frozenset(int(s) for s in signs)
        for s in signs:
            if not alpha <= s < n:
                raise ValueError(f"sign flip on non-quaternary coordinate {s + 1}")
        self.alpha = alpha
        self.beta = beta
        self.perm = perm
        self.signs = signs

    @classmethod
    def identity(cls, alpha: int, beta: int) -> "Monomial":
        return cls(alpha, beta)

    @classmethod
    def from_cycles(cls, alpha: int, beta: int, cycles, signs=()) -> "Monomial":
        """Build from 1-based disjoint cycles and 1-based sign positions."""
        n = alpha + beta
        perm = list(range(n))
        seen = set()
        for cyc in cycles:
            cyc = [int(c) - 1 for c in cyc]
            for c in cyc:
                if not 0 <= c < n:
                    raise ValueError(f"coordinate {c + 1} out of range 1..{n}")
                if c in seen:
                    raise ValueError(f"coordinate {c + 1} appears in more than one cycle")
                seen.add(c)
            for x, y in zip(cyc, cyc[1:] + cyc[:1]):
                perm[x] = y
        return cls(alpha, beta, perm, [int(s) - 1 for s in signs])

    @property
    def is_permutation(self) -> bool:
        return not self.signs

    def cycles(self) -> list:
        """1-based nontrivial cycles, each starting at its smallest element."""
        out, seen = [], set()
        for i in range(len(self.perm)):
            if i in seen or self.perm[i] == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j + 1)
                j = self.perm[j]
            out.append(tuple(cyc))
        return out

    def compose(self, other: "Monomial") -> "Monomial":
        """``self`` after ``other``."""
        if (self.alpha, self.beta) != (other.alpha, other.beta):
            raise ValueError("shape mismatch")
        perm = [self.perm[p] for p in other.perm]
        moved = {self.perm[s] for s in other.signs}
        return Monomial(self.alpha, self.beta, perm, moved ^ self.signs)

    def __matmul__(self, other):
        return self.compose(other)

    def inverse(self) -> "Monomial":
        inv = [0] * len(self.perm)
        for i, p in enumerate(self.perm):
            inv[p] = i
        return Monomial(self.alpha, self.beta, inv, {inv[s] for s in self.signs})

    def __eq__(self, other):
        return (
            isinstance(other, Monomial)
            and (self.alpha, self.beta, self.perm, self.signs)
            == (other.alpha, other.beta, other.perm, other.signs)
        )

    def __hash__(self):
        return hash((self.alpha, self.beta, self.perm, self.signs))

    def __repr__(self):
        return f"Monomial({format_monomial(self) or 'Id'})"

    def apply_vector(self, v: MixedVector) -> MixedVector:
        if v.shape != (self.alpha, self.beta):
            raise ValueError(f"shape mismatch: {v.shape}")
        x = list(v.bin) + list(v.quat)
        y = [0] * len(x)
        for i, p in enumerate(self.perm):
            y[p] = x[i]
        for s in self.signs:
            y[s] = (-y[s]) % 4
        return MixedVector(tuple(y[: self.alpha]), tuple(y[self.alpha:]))

    def apply_matrix(self, M: MixedMatrix) -> MixedMatrix:
        return MixedMatrix(M.alpha, M.beta, [self.apply_vector(r) for r in M.rows])


def format_monomial(m: Monomial) -> str:
    """Cycle notation with ``!k`` sign suffixes; identity is the empty string."""
    s = "".join("(" + ",".join(map(str, c)) + ")" for c in m.cycles())
    s += "".join(f"!{k + 1}" for k in sorted(m.signs))
    return s


def apply_monomial(C: AdditiveCode, m: Monomial) -> AdditiveCode:
    if C.shape != (m.alpha, m.beta):
        raise ValueError(f"shape mismatch: {C.shape} vs {(m.alpha, m.beta)}")
    return AdditiveCode(m.apply_matrix(C.gens))


def _all_12(alpha: int, beta: int) -> MixedVector:
    return MixedVector((1,) * alpha, (2,) * beta)


def extend_parity(H: MixedMatrix) -> MixedMatrix:
    """Prepend a zero binary column and the all-(1|2) row."""
    rows = [_all_12(H.alpha + 1, H.beta)]
    rows += [MixedVector((0,) + r.bin, r.quat) for r in H.rows]
    return MixedMatrix(H.alpha + 1, H.beta, rows)


def puncture_parity(H: MixedMatrix) -> MixedMatrix:
    """Inverse of :func:`extend_parity` on row spaces.

    Keeps the subgroup of rows vanishing at binary coordinate 1 and deletes
    that coordinate.  Requires the all-(1|2) vector in the row space.
    """
    if H.alpha < 1:
        raise ValueError("puncturing needs at least one binary coordinate")
    u = _all_12(H.alpha, H.beta)
    if not contains(AdditiveCode(H), u):
        raise ValueError("the all-(1|2) vector is not in the row space")
    rows = []
    for r in H.rows:
        if r.bin[0]:
            r = r + u
        rows.append(MixedVector(r.bin[1:], r.quat))
    return canonical_matrix(MixedMatrix(H.alpha - 1, H.beta, rows))


def perfect_covering(C: AdditiveCode) -> bool:
    """True iff the radius-1 Hamming balls around the Gray image tile F^n."""
    words = gray_image(C)
    n = words.shape[1]
    if n > 30:
        raise GuardExceeded(f"binary length {n} too large for a covering check")
    weights = 1 << np.arange(n, dtype=np.int64)
    ints = words.astype(np.int64) @ weights
    hit = np.zeros(1 << n, dtype=np.int64)
    np.add.at(hit, ints, 1)
    for k in range(n):
        np.add.at(hit, ints ^ (1 << k), 1)
    return bool((hit == 1).all())



def all_vectors(alpha: int, beta: int) -> Iterator[MixedVector]:
    for b in itertools.product((0, 1), repeat=alpha):
        for q in itertools.product(range(4), repeat=beta):
            yield MixedVector(b, q)
