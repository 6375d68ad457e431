
import pytest
from hypothesis import given, settings as hsettings, strategies as st

from conftest import shaped_matrices, shapes
from z2z4.algebra import MixedMatrix, MixedVector
from z2z4.code import (
    AdditiveCode,
    Monomial,
    all_vectors,
    apply_monomial,
    contains,
    enumerate_codewords,
    extend_parity,
    format_monomial,
    gray_image,
    gray_map,
    lee_weight,
    min_distance,
    perfect_covering,
    puncture_parity,
)
from z2z4.config import GuardExceeded, settings
from z2z4.constructions import extended_hamming_parity, hamming_parity
from z2z4.oracle import codeword_set


@pytest.mark.parametrize("x, image, lee", [(0, (0, 0), 0), (1, (0, 1), 1), (2, (1, 1), 2), (3, (1, 0), 1)])
def test_gray_and_lee_on_single_symbols(x, image, lee):
    v = MixedVector((), (x,))
    assert gray_map(v) == image
    assert lee_weight(v) == lee == sum(image)


def test_gray_keeps_binary_part_first():
    assert gray_map(MixedVector((1, 0), (3, 2))) == (1, 0, 1, 0, 1, 1)


@hsettings(max_examples=80, deadline=None)
@given(shaped_matrices(max_alpha=3, max_beta=3, max_rows=4))
def test_enumeration_and_membership_match_closure(M):
    C = AdditiveCode(M)
    words = codeword_set(M)
    listed = {(v.bin, v.quat) for v in enumerate_codewords(C)}
    assert listed == set(words)
    assert len(C) == len(words)
    for v in all_vectors(*M.shape):
        assert contains(C, v) == ((v.bin, v.quat) in words)


@hsettings(max_examples=60, deadline=None)
@given(shaped_matrices(max_alpha=3, max_beta=3, max_rows=4))
def test_min_distance_is_min_gray_weight(M):
    C = AdditiveCode(M)
    if C.log2_size == 0:
        with pytest.raises(ValueError):
            min_distance(C)
        return
    G = gray_image(C)
    w = G.sum(axis=1)
    assert min_distance(C) == int(w[w > 0].min())


def test_gray_image_is_injective(rng):
    H = hamming_parity(3)
    C = AdditiveCode.from_parity_check(H)
    G = gray_image(C)
    assert len({tuple(r) for r in G}) == len(C) == 16


def test_sphere_search_agrees_with_enumeration():
    C = AdditiveCode.from_parity_check(hamming_parity(4))
    full = min_distance(C)
    settings.guard_log2 = 10
    assert C.log2_size > settings.guard_log2
    assert min_distance(C) == full == 3


def test_sphere_search_guard():
    C = AdditiveCode.from_parity_check(hamming_parity(5))
    settings.guard_log2 = 3
    with pytest.raises(GuardExceeded):
        min_distance(C)


def test_enumeration_guard():
    settings.guard_log2 = 3
    with pytest.raises(GuardExceeded):
        list(enumerate_codewords(AdditiveCode.ambient(2, 2)))


def test_hamming_is_perfect():
    assert perfect_covering(AdditiveCode.from_parity_check(hamming_parity(3)))
    assert not perfect_covering(AdditiveCode.from_parity_check(extended_hamming_parity(3)))


# --- monomials -------------------------------------------------------------

@st.composite
def monomials(draw, alpha, beta):
    bp = draw(st.permutations(range(alpha)))
    qp = draw(st.permutations(range(alpha, alpha + beta)))
    signs = draw(st.sets(st.integers(alpha, alpha + beta - 1))) if beta else set()
    return Monomial(alpha, beta, list(bp) + list(qp), signs)


@st.composite
def monomial_triples(draw):
    a, b = draw(shapes(max_alpha=4, max_beta=4))
    return draw(monomials(a, b)), draw(monomials(a, b)), draw(
        st.builds(lambda x, y: MixedVector(tuple(x), tuple(y)),
                  st.lists(st.integers(0, 1), min_size=a, max_size=a),
                  st.lists(st.integers(0, 3), min_size=b, max_size=b)))


@given(monomial_triples())
def test_monomial_action_is_a_group_action(t):
    m1, m2, v = t
    assert (m1 @ m2).apply_vector(v) == m1.apply_vector(m2.apply_vector(v))
    assert m1.inverse().apply_vector(m1.apply_vector(v)) == v
    assert (m1 @ m1.inverse()) == Monomial.identity(m1.alpha, m1.beta)
    assert lee_weight(m1.apply_vector(v)) == lee_weight(v)


@given(monomial_triples())
def test_cycles_roundtrip(t):
    m = t[0]
    back = Monomial.from_cycles(m.alpha, m.beta, m.cycles(), [s + 1 for s in m.signs])
    assert back == m


def test_monomial_conventions():
    m = Monomial.from_cycles(1, 3, [(2, 3, 4)], [2])
    assert m.perm == (0, 2, 3, 1)
    v = MixedVector((1,), (1, 2, 3))
    # coordinate 2 moves to 3, 3 to 4, 4 to 2, then position 2 is negated
    assert m.apply_vector(v) == MixedVector((1,), (1, 1, 2))
    assert format_monomial(m) == "(2,3,4)!2"
    assert format_monomial(Monomial.identity(2, 2)) == ""


@pytest.mark.parametrize(
    "args",
    [
        dict(perm=[1, 0, 2]),  # crosses the split with alpha=1
        dict(perm=[0, 0, 1]),
        dict(signs=[0]),
    ],
)
def test_monomial_rejects_bad_input(args):
    with pytest.raises(ValueError):
        Monomial(1, 2, **args)


def test_from_cycles_rejects_repeats():
    with pytest.raises(ValueError):
        Monomial.from_cycles(0, 4, [(1, 2), (2, 3)])


def test_apply_monomial_matches_pointwise_image():
    H = MixedMatrix.from_lists(2, 2, [[1, 0, 1, 2], [0, 1, 2, 3]])
    C = AdditiveCode(H)
    m = Monomial.from_cycles(2, 2, [(1, 2), (3, 4)], [4])
    image = {m.apply_vector(v) for v in enumerate_codewords(C)}
    assert set(enumerate_codewords(apply_monomial(C, m))) == image


# --- extension and puncturing ---------------------------------------------

def test_extend_then_puncture_is_identity():
    for t in (3, 4):
        H = hamming_parity(t)
        E = extend_parity(H)
        assert E.alpha == H.alpha + 1
        assert AdditiveCode(puncture_parity(E)) == AdditiveCode(H)


def test_extended_hamming_has_distance_four():
    C = AdditiveCode.from_parity_check(extend_parity(hamming_parity(3)))
    assert min_distance(C) == 4
    assert C.ctype == AdditiveCode.from_parity_check(extended_hamming_parity(3)).ctype


def test_puncture_requires_all_one_two_row():
    with pytest.raises(ValueError):
        puncture_parity(MixedMatrix.from_lists(2, 1, [[1, 0, 0]]))
    with pytest.raises(ValueError):
        puncture_parity(MixedMatrix.from_lists(0, 2, [[2, 2]]))


def test_code_equality_and_hash():
    a = AdditiveCode(MixedMatrix.from_lists(0, 2, [[1, 1], [0, 2]]))
    b = AdditiveCode(MixedMatrix.from_lists(0, 2, [[1, 3], [1, 1]]))
    assert a == b and hash(a) == hash(b)
