import pytest
from hypothesis import given, settings as hsettings, strategies as st

from conftest import matrices, shapes
from z2z4.algebra import CodeType, MixedMatrix
from z2z4.code import AdditiveCode, Monomial, apply_monomial
from z2z4.constructions import extended_perfect_z4_dual, extended_perfect_z2z4_dual
from z2z4.duality import dual
from z2z4.lattice import (
    check_dual_size_bounds,
    check_eta_bounds,
    check_span_bounds,
    eta,
    eta_bounds,
    intersect,
    intersection_dual_type,
    span,
    structure_bounds,
    structure_range,
)
from z2z4.oracle import codeword_set


@st.composite
def pairs(draw, max_alpha=3, max_beta=3):
    a, b = draw(shapes(max_alpha, max_beta))
    return draw(matrices(a, b, 4)), draw(matrices(a, b, 4))


@hsettings(max_examples=120, deadline=None)
@given(pairs())
def test_span_and_intersection_match_sets(p):
    M1, M2 = p
    C1, C2 = AdditiveCode(M1), AdditiveCode(M2)
    s1, s2 = codeword_set(M1), codeword_set(M2)
    I = intersect(C1, C2)
    assert codeword_set(I.gens) == s1 & s2
    assert eta(C1, C2) == len(s1 & s2)
    assert codeword_set(span(C1, C2).gens) == codeword_set(M1.stack(M2))


@hsettings(max_examples=120, deadline=None)
@given(pairs(max_alpha=4, max_beta=4))
def test_intersection_dual_type_is_span_of_duals(p):
    C1, C2 = AdditiveCode(p[0]), AdditiveCode(p[1])
    assert intersection_dual_type(C1, C2) == dual(intersect(C1, C2)).ctype
    assert intersection_dual_type(C1, C2) == span(dual(C1), dual(C2)).ctype


@hsettings(max_examples=200, deadline=None)
@given(pairs(max_alpha=4, max_beta=4))
def test_generic_bounds_hold(p):
    C1, C2 = AdditiveCode(p[0]), AdditiveCode(p[1])
    for r in check_span_bounds(C1, C2) + [check_dual_size_bounds(C1, C2), check_eta_bounds(C1, C2)]:
        assert r.passed, str(r)


def test_shape_mismatch():
    with pytest.raises(ValueError):
        span(AdditiveCode.zero(1, 1), AdditiveCode.zero(2, 1))


def test_eta_of_code_with_itself_is_its_size():
    C = AdditiveCode.from_parity_check(extended_perfect_z4_dual(4, 2))
    assert eta(C, C) == len(C)


def test_quaternary_eta_bounds_values():
    d = CodeType(0, 8, 1, 2)
    assert eta_bounds("quaternary-perfect", d, d) == (8, 11)
    with pytest.raises(ValueError):
        eta_bounds("quaternary-perfect", CodeType(0, 8, 1, 1), d)
    with pytest.raises(ValueError):
        eta_bounds("nope", d, d)


def test_additive_eta_bounds_values():
    H = extended_perfect_z2z4_dual(4, 3)
    d = AdditiveCode(H).ctype
    lo, hi = eta_bounds("additive-extended-perfect", d, d)
    assert hi == 16 - 4 - 1
    assert lo == (16 - 8 if d.delta == 1 else 16 - 9)


def test_intersection_with_permuted_copy_within_quaternary_bounds():
    C = AdditiveCode.from_parity_check(extended_perfect_z4_dual(4, 2))
    m = Monomial.from_cycles(0, 8, [(1, 2, 3, 4, 5, 6, 7, 8)])
    D = apply_monomial(C, m)
    assert check_eta_bounds(C, D, "quaternary-perfect").passed
    d = dual(C).ctype
    x = intersection_dual_type(C, D)
    assert all(r.passed for r in structure_bounds("quaternary-perfect", d, d, x))


def test_structure_range_contains_the_pair_itself():
    for t, r in [(4, 3), (4, 4), (5, 3)]:
        d = AdditiveCode(extended_perfect_z2z4_dual(t, r)).ctype
        assert d in structure_range("additive-extended-perfect", d, d)


def test_structure_bounds_need_matching_additive_types():
    with pytest.raises(ValueError):
        structure_bounds("additive-perfect", CodeType(3, 2, 1, 1, 1), CodeType(3, 2, 3, 0, 1), CodeType(3, 2, 3, 1, 1))


def test_zero_alpha_kappa_is_zero():
    C = AdditiveCode(MixedMatrix.from_lists(0, 2, [[2, 0]]))
    assert C.ctype == CodeType(0, 2, 1, 0, 0)
