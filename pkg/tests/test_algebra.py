import numpy as np
import pytest
from hypothesis import given, settings as hsettings, strategies as st

from conftest import shaped_matrices, shapes, vectors
from z2z4.algebra import (
    CodeType,
    MixedMatrix,
    MixedVector,
    canonical_matrix,
    compute_type,
    element_order,
    pack_row,
    packed_add,
    packed_neg,
    packed_type,
    unpack_row,
    z2_rank,
)
from z2z4.batch import batch_type
from z2z4.oracle import codeword_set, type_of_set


def test_codetype_str_and_size():
    t = CodeType(4, 2, 2, 1, 2)
    assert str(t) == "(4,2;2,1;2)"
    assert t.log2_size == 4 and t.size == 16


@pytest.mark.parametrize(
    "t, ok",
    [
        (CodeType(4, 2, 2, 1, 2), True),
        (CodeType(0, 4, 0, 2), True),
        (CodeType(4, 2, 2, 3, 0), False),  # delta > beta
        (CodeType(2, 2, 1, 1, 2), False),  # kappa > gamma
        (CodeType(1, 1, 2, 1, 1), False),  # gamma + delta > alpha + beta
    ],
)
def test_codetype_validity(t, ok):
    assert t.is_valid() is ok
    if not ok:
        with pytest.raises(ValueError):
            t.validate()


def test_codetype_rejects_negative():
    with pytest.raises(ValueError):
        CodeType(1, 1, -1, 0)


def test_vector_entries_checked():
    with pytest.raises(ValueError):
        MixedVector((2,), ())
    with pytest.raises(ValueError):
        MixedVector((), (4,))
    assert MixedVector.from_ints([3], [5, -1]) == MixedVector((1,), (1, 3))


def test_vector_arithmetic():
    u = MixedVector((1, 0), (1, 2, 3))
    v = MixedVector((1, 1), (3, 3, 0))
    assert u + v == MixedVector((0, 1), (0, 1, 3))
    assert -u == MixedVector((1, 0), (3, 2, 1))
    assert u - u == MixedVector.zero(2, 3)
    assert 2 * u == MixedVector((0, 0), (2, 0, 2))
    assert str(u) == "10|123"
    with pytest.raises(ValueError):
        u + MixedVector((1,), (1, 2, 3))


@pytest.mark.parametrize(
    "v, order",
    [
        (MixedVector((0, 0), (0, 0)), 1),
        (MixedVector((1, 0), (0, 2)), 2),
        (MixedVector((0, 0), (2, 2)), 2),
        (MixedVector((1, 0), (0, 3)), 4),
    ],
)
def test_element_order(v, order):
    assert element_order(v) == order


@given(shapes().flatmap(lambda s: vectors(*s)))
def test_pack_roundtrip(v):
    assert unpack_row(pack_row(v.bin, v.quat), v.alpha, v.beta) == v


@given(shapes().flatmap(lambda s: st.tuples(vectors(*s), vectors(*s))))
def test_packed_group_ops(uv):
    u, v = uv
    a, b = u.shape
    assert unpack_row(packed_add(u.packed(), v.packed()), a, b) == u + v
    assert unpack_row(packed_neg(u.packed()), a, b) == -u


def test_z2_rank():
    assert z2_rank(np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]])) == 2
    assert z2_rank(np.zeros((2, 3), dtype=int)) == 0


@hsettings(max_examples=150, deadline=None)
@given(shaped_matrices(max_alpha=3, max_beta=3, max_rows=4))
def test_type_matches_explicit_group(M):
    a, b = M.shape
    t = compute_type(M)
    g, d, k = type_of_set(codeword_set(M), a, b)
    assert (t.gamma, t.delta, t.kappa) == (g, d, k if a else 0)
    assert t.is_valid()


@hsettings(max_examples=150, deadline=None)
@given(shaped_matrices(max_alpha=5, max_beta=5, max_rows=6))
def test_packed_type_matches_reduction(M):
    t = compute_type(M)
    assert packed_type(M.packed(), M.beta) == (t.gamma, t.delta, t.kappa)


@hsettings(max_examples=60, deadline=None)
@given(shaped_matrices(max_alpha=4, max_beta=4, max_rows=5))
def test_canonical_form_is_idempotent_and_span_preserving(M):
    Cm = canonical_matrix(M)
    assert canonical_matrix(Cm) == Cm
    assert codeword_set(Cm) == codeword_set(M)


def test_batch_type_matches_packed_type(rng):
    for _ in range(200):
        a, b = int(rng.integers(0, 6)), int(rng.integers(0, 6))
        mats = []
        for _ in range(5):
            n = int(rng.integers(0, 6))
            rows = [MixedVector.from_ints(rng.integers(0, 2, a), rng.integers(0, 4, b)) for _ in range(n)]
            mats.append(MixedMatrix(a, b, rows))
        width = max(len(m) for m in mats)
        cols = []
        for i in range(width):
            packed = [m.rows[i].packed() if i < len(m) else (0, 0, 0) for m in mats]
            cols.append(tuple(np.array([p[j] for p in packed], dtype=np.int64) for j in range(3)))
        if not cols:
            continue
        g, d, k = batch_type(cols, a, b)
        for i, m in enumerate(mats):
            assert (g[i], d[i], k[i]) == packed_type(m.packed(), b)


def test_batch_type_width_limit():
    z = np.zeros(1, dtype=np.int64)
    with pytest.raises(ValueError):
        batch_type([(z, z, z)], 40, 30)
