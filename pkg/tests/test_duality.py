import numpy as np
import pytest
from hypothesis import given, settings as hsettings

from conftest import shaped_matrices
from z2z4.algebra import CodeType, MixedMatrix, MixedVector
from z2z4.code import AdditiveCode
from z2z4.duality import dual, dual_type, inner_product, z4_kernel
from z2z4.oracle import annihilator_set, codeword_set


def test_inner_product_weights_binary_part_by_two():
    u = MixedVector((1, 1), (1, 3))
    v = MixedVector((1, 0), (2, 1))
    assert inner_product(u, v) == (2 * 1 + 1 * 2 + 3 * 1) % 4 == 3


@hsettings(max_examples=150, deadline=None)
@given(shaped_matrices(max_alpha=3, max_beta=3, max_rows=4))
def test_dual_is_the_annihilator(M):
    D = dual(AdditiveCode(M))
    assert codeword_set(D.gens) == annihilator_set(M)


@hsettings(max_examples=150, deadline=None)
@given(shaped_matrices(max_alpha=5, max_beta=5, max_rows=6))
def test_dual_type_formula_and_sizes(M):
    C = AdditiveCode(M)
    D = dual(C)
    a, b = C.shape
    assert D.ctype == dual_type(C.ctype)
    assert C.log2_size + D.log2_size == a + 2 * b
    assert dual(D) == C
    assert dual_type(dual_type(C.ctype)) == C.ctype


def test_dual_type_worked_example():
    # (4,2;2,1;2) is self-dual in type: 4+2-4=2, 2-2-1+2=1, 4-2=2
    assert dual_type(CodeType(4, 2, 2, 1, 2)) == CodeType(4, 2, 2, 1, 2)
    assert dual_type(CodeType(0, 4, 0, 2)) == CodeType(0, 4, 0, 2)
    assert dual_type(CodeType(3, 0, 1, 0, 1)) == CodeType(3, 0, 2, 0, 2)


def test_dual_type_rejects_invalid():
    with pytest.raises(ValueError):
        dual_type(CodeType(1, 1, 3, 0, 0))


def test_dual_of_zero_and_ambient():
    assert dual(AdditiveCode.zero(2, 3)) == AdditiveCode.ambient(2, 3)
    assert dual(AdditiveCode.ambient(2, 3)) == AdditiveCode.zero(2, 3)


def test_z4_kernel_spans_solutions(rng):
    for _ in range(40):
        A = rng.integers(0, 4, (rng.integers(1, 4), rng.integers(1, 5)))
        K = z4_kernel(A)
        assert ((A @ K.T) % 4 == 0).all()
        n = A.shape[1]
        sols = sum(1 for x in np.ndindex(*(4,) * n) if ((A @ np.array(x)) % 4 == 0).all())
        got = codeword_set(MixedMatrix.from_arrays(np.zeros((len(K), 0), dtype=int), K))
        assert len(got) == sols


def test_parity_check_roundtrip():
    H = MixedMatrix.from_lists(1, 3, [[1, 1, 2, 0], [0, 1, 1, 1]])
    C = AdditiveCode.from_parity_check(H)
    assert dual(C) == AdditiveCode(H)
    assert AdditiveCode(C.parity_check()) == AdditiveCode(H)
