"""
Parity-check matrices for the perfect and extended perfect families and
the recursive doubling/quadrupling constructions.

Every builder returns the parity-check matrix (a generator matrix of the
dual code) and checks its type against the claimed dual type before
returning.  Column orders are lexicographic with the first row as the
most significant digit.
"""

from __future__ import annotations

import itertools
import logging

from .algebra import CodeType, MixedMatrix, MixedVector, packed_type
from .code import Monomial

log = logging.getLogger(__name__)


def _certify(H: MixedMatrix, gamma: int, delta: int, kappa: int | None = None) -> MixedMatrix:
    g, d, k = packed_type(H.packed(), H.beta)
    if (g, d) != (gamma, delta) or (kappa is not None and k != kappa):
        raise AssertionError(
            f"construction produced type ({g},{d};{k}), expected ({gamma},{delta};{kappa})"
        )
    return H


def _cols_to_matrix(alpha: int, beta: int, bin_cols, quat_cols, nrows: int) -> MixedMatrix:
    rows = []
    for i in range(nrows):
        rows.append(MixedVector(tuple(c[i] for c in bin_cols), tuple(c[i] for c in quat_cols)))
    return MixedMatrix(alpha, beta, rows)


# ---------------------------------------------------------------------------
# binary Hamming codes
# ---------------------------------------------------------------------------

def hamming_parity(t: int) -> MixedMatrix:
    """t x (2^t - 1) matrix whose columns are the nonzero vectors of Z2^t."""
    if t < 2:
        raise ValueError("t must be at least 2")
    cols = [c for c in itertools.product((0, 1), repeat=t) if any(c)]
    return _certify(_cols_to_matrix(len(cols), 0, cols, [], t), t, 0, t)


def extended_hamming_parity(t: int) -> MixedMatrix:
    """(t+1) x 2^t matrix with columns {1} x Z2^t."""
    if t < 2:
        raise ValueError("t must be at least 2")
    cols = [(1,) + c for c in itertools.product((0, 1), repeat=t)]
    return _certify(_cols_to_matrix(len(cols), 0, cols, [], t + 1), t + 1, 0, t + 1)


# ---------------------------------------------------------------------------
# extended perfect Z4-linear codes (alpha = 0)
# ---------------------------------------------------------------------------

def extended_perfect_z4_dual(t: int, delta: int) -> MixedMatrix:
    """Parity-check matrix of the extended perfect Z4-linear code of length 2^t.

    Columns are all vectors (2a | 1, q) with a in Z2^gamma, q in Z4^(delta-1)
    and gamma = t + 1 - 2*delta; the code's dual has type (0, 2^(t-1); gamma, delta).
    """
    if t < 3:
        raise ValueError("t must be at least 3")
    if not 1 <= delta <= (t + 1) // 2:
        raise ValueError(f"delta must lie in 1..{(t + 1) // 2} for t={t}")
    if t == 3:
        log.info("t=3 is desk-scale, below the length-16 range of the existence theorem")
    gamma = t + 1 - 2 * delta
    cols = [
        tuple(2 * x for x in a) + (1,) + q
        for a in itertools.product((0, 1), repeat=gamma)
        for q in itertools.product(range(4), repeat=delta - 1)
    ]
    H = _cols_to_matrix(0, len(cols), [], cols, gamma + delta)
    return _certify(H, gamma, delta, 0)


# ---------------------------------------------------------------------------
# perfect and extended perfect Z2Z4-linear codes (alpha != 0)
# ---------------------------------------------------------------------------

def perfect_z2z4_params(t: int, r: int) -> CodeType:
    """Dual type (2^r - 1, 2^(t-1) - 2^(r-1); 2r - t, t - r) of the perfect code."""
    if not 2 <= r <= t <= 2 * r:
        raise ValueError(f"need 2 <= r <= t <= 2r, got t={t}, r={r}")
    gamma, delta = 2 * r - t, t - r
    return CodeType(2 ** r - 1, 2 ** (t - 1) - 2 ** (r - 1), gamma, delta, gamma)


def perfect_z2z4_dual(t: int, r: int) -> MixedMatrix:
    """Parity-check matrix of the perfect Z2Z4-linear code of length 2^t - 1.

    Binary columns: the nonzero vectors of Z2^r.  Quaternary columns: one
    representative (first odd entry equal to 1) of each {v, -v} among the
    order-four vectors of {0,2}^gamma x Z4^delta.
    """
    ct = perfect_z2z4_params(t, r)
    gamma, delta = ct.gamma, ct.delta
    bcols = [c for c in itertools.product((0, 1), repeat=r) if any(c)]
    qcols = []
    for a in itertools.product((0, 2), repeat=gamma):
        for q in itertools.product(range(4), repeat=delta):
            odd = [x for x in q if x % 2]
            if odd and odd[0] == 1:
                qcols.append(a + q)
    H = _cols_to_matrix(len(bcols), len(qcols), bcols, qcols, r)
    assert H.shape == (ct.alpha, ct.beta)
    return _certify(H, gamma, delta, gamma)


def extended_perfect_z2z4_dual(t: int, r: int) -> MixedMatrix:
    from .code import extend_parity

    ct = perfect_z2z4_params(t, r)
    H = extend_parity(perfect_z2z4_dual(t, r))
    return _certify(H, ct.gamma + 1, ct.delta, ct.gamma + 1)


# ---------------------------------------------------------------------------
# recursive constructions
# ---------------------------------------------------------------------------

def double_quaternary(H: MixedMatrix) -> MixedMatrix:
    """(0 | 2) over (H | H): dual type (0,b;g,d) -> (0,2b;g+1,d)."""
    if H.alpha != 0:
        raise ValueError("double_quaternary needs alpha = 0")
    b = H.beta
    rows = [MixedVector((), (0,) * b + (2,) * b)]
    rows += [MixedVector((), r.quat + r.quat) for r in H.rows]
    return MixedMatrix(0, 2 * b, rows)


def double_quaternary_perms(beta: int) -> dict:
    """Proof permutations on the doubled length 2*beta, keyed by the gain in gamma."""
    return {
        1: Monomial.identity(0, 2 * beta),
        2: Monomial.from_cycles(0, 2 * beta, [(1, beta + 1)]),
    }


def quadruple_quaternary(H: MixedMatrix) -> MixedMatrix:
    """(H H H H) over (0 1 2 3): dual type (0,b;g,d) -> (0,4b;g,d+1)."""
    if H.alpha != 0:
        raise ValueError("quadruple_quaternary needs alpha = 0")
    b = H.beta
    rows = [MixedVector((), r.quat * 4) for r in H.rows]
    rows.append(MixedVector((), tuple(k for k in range(4) for _ in range(b))))
    return MixedMatrix(0, 4 * b, rows)


def quadruple_quaternary_perms(beta: int) -> dict:
    """Proof permutations keyed by the claimed (gamma gain, delta gain)."""
    n = 4 * beta
    return {
        (0, 1): Monomial.identity(0, n),
        (0, 2): Monomial.from_cycles(0, n, [(1, beta + 1)]),
        (1, 1): Monomial.from_cycles(0, n, [(1, 2 * beta + 1)]),
    }


def double_additive(H: MixedMatrix) -> MixedMatrix:
    """(0 1 | 0 2) over (Ha Ha | Hb Hb): (a,b;g,d) -> (2a,2b;g+1,d)."""
    if H.alpha == 0:
        raise ValueError("double_additive needs alpha != 0")
    a, b = H.shape
    rows = [MixedVector((0,) * a + (1,) * a, (0,) * b + (2,) * b)]
    rows += [MixedVector(r.bin + r.bin, r.quat + r.quat) for r in H.rows]
    return MixedMatrix(2 * a, 2 * b, rows)


def double_additive_perms(alpha: int, beta: int) -> dict:
    """Proof permutations keyed by the claimed (gamma, delta, kappa) gain."""
    A, B = 2 * alpha, 2 * beta
    return {
        (1, 0, 1): Monomial.identity(A, B),
        (2, 0, 2): Monomial.from_cycles(A, B, [(1, alpha + 1)]),
        (2, 0, 1): Monomial.from_cycles(A, B, [(2 * alpha + 1, 2 * alpha + beta + 1)]),
    }


def quadruple_additive(H: MixedMatrix) -> MixedMatrix:
    """(a,b;1,d) -> (2a, a+4b; 1, d+1); H's first row must be all-(1|2)."""
    a, b = H.shape
    if a == 0:
        raise ValueError("quadruple_additive needs alpha != 0")
    if not H.rows or H.rows[0] != MixedVector((1,) * a, (2,) * b):
        raise ValueError("first row must be the all-(1|2) vector")
    g, _, _ = packed_type(H.packed(), b)
    if g != 1:
        raise ValueError(f"quadruple_additive needs gamma = 1, got {g}")
    rows = [
        MixedVector(r.bin * 2, tuple(2 * x for x in r.bin) + r.quat * 4) for r in H.rows
    ]
    rows.append(
        MixedVector(
            (0,) * a + (1,) * a,
            (1,) * a + tuple(k for k in range(4) for _ in range(b)),
        )
    )
    return MixedMatrix(2 * a, a + 4 * b, rows)


def quadruple_additive_perms(alpha: int, beta: int) -> dict:
    """Proof permutations keyed by the claimed (gamma, delta, kappa) gain."""
    A, B = 2 * alpha, alpha + 4 * beta
    a, b = alpha, beta
    return {
        (0, 1, 0): Monomial.identity(A, B),
        (0, 2, 0): Monomial.from_cycles(A, B, [(2 * a + 1, 3 * a + b + 1)]),
        (1, 1, 0): Monomial.from_cycles(A, B, [(3 * a + 1, 3 * a + 2 * b + 1)]),
        (1, 1, 1): Monomial.from_cycles(A, B, [(1, a + 1)]),
    }


def lemma_lex_pair(m: int):
    """The pair of length-4^m quaternary perfect codes and the transpositions.

    Returns ``(H1, H2, sigmas)`` where H1 = (1...1; q_1..q_m) with the q rows
    listing Z4^m lexicographically, H2 = (2 H_2m; 1...1) with H_2m the
    lexicographic extended Hamming matrix, and ``sigmas[i-1]`` swaps two
    columns that differ only in row 2 q_i.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    beta = 4 ** m
    q_cols = list(itertools.product(range(4), repeat=m))
    H1 = _cols_to_matrix(0, beta, [], [(1,) + c for c in q_cols], m + 1)
    Hx = extended_hamming_parity(2 * m)
    rows = [MixedVector((), tuple(2 * x for x in r.bin)) for r in Hx.rows]
    rows.append(MixedVector((), (1,) * beta))
    H2 = MixedMatrix(0, beta, rows)
    sigmas = []
    for i in range(1, m + 1):
        x = 1 << (2 * m - 2 * i + 1)
        y = x | (1 << (2 * m - 2 * i))
        sigmas.append(Monomial.from_cycles(0, beta, [(x + 1, y + 1)]))
    _certify(H1, 0, m + 1, 0)
    _certify(H2, 2 * m, 1, 0)
    return H1, H2, sigmas


def lex_pair_permutation(sigmas, i: int) -> Monomial:
    """pi_i = sigma_1 o sigma_2 o ... o sigma_i."""
    pi = sigmas[0]
    for s in sigmas[1:i]:
        pi = pi.compose(s)
    return pi


# ---------------------------------------------------------------------------
# matrices printed verbatim
# ---------------------------------------------------------------------------

def _m(alpha, beta, text):
    rows = []
    for line in text.split():
        digits = [int(c) for c in line.replace("|", "")]
        rows.append(digits)
    return MixedMatrix.from_lists(alpha, beta, rows)


_REGISTRY = {
    # length-15 perfect code, r=3: dual type (7,4;2,1)
    "ex1-perfect": (7, 4, "0001111|0022 0110011|0202 1010101|1111"),
    # its extension, dual type (8,4;3,1)
    "ex1-extended": (8, 4, "11111111|2222 00001111|0022 00110011|0202 01010101|1111"),
    # length-32 extended perfect Z4-linear code with delta=2
    "ex2-t5-delta2": (
        0,
        16,
        "0000000022222222 0000222200002222 1111111111111111 0123012301230123",
    ),
    # beta=4 pair: dual types (0,4;2,1) and (0,4;0,2)
    "qlpc-t3-H1": (0, 4, "0022 0202 1111"),
    "qlpc-t3-H2": (0, 4, "1111 0123"),
    # parity-check matrix of C2 and (1,2)C2 for the beta=4 example
    "exbeta4-int-12": (0, 4, "1111 0123 1023"),
    # t=4 pair for the gaps theorem: (0,8;1,2)
    "gaps-t4-H2": (0, 8, "00002222 11111111 01230123"),
    # length-16 structure pair: (0,16;2,2) and (0,16;0,3)
    "sec32-H1": (
        0,
        16,
        "0000000022222222 0000222200002222 1111111111111111 0123012301230123",
    ),
    "sec32-H2": (
        0,
        16,
        "1111111111111111 0000111122223333 0123012301230123",
    ),
    # beta=4 additive example, dual type (4,2;2,1)
    "sec4-exbeta4-H2": (4, 2, "1111|22 0011|02 0101|11"),
    # (4,6;1,2) code of the m=2 additive table
    "sec4-lemma17-H1": (4, 6, "1111|222222 0011|111102 0101|012311"),
}


def paper_matrix_names() -> list:
    return sorted(_REGISTRY)


def paper_matrix(name: str) -> MixedMatrix:
    """A matrix exactly as printed, by stable registry name."""
    try:
        a, b, text = _REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown matrix {name!r}; known: {', '.join(paper_matrix_names())}") from None
    return _m(a, b, text)
