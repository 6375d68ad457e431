import pytest

from z2z4.algebra import CodeType, MixedVector
from z2z4.code import AdditiveCode, Monomial, apply_monomial, contains
from z2z4.constructions import extended_perfect_z4_dual
from z2z4.duality import dual
from z2z4.oracle import codeword_set
from z2z4.verify import THEOREMS, verify_bound_theorem


@pytest.mark.parametrize(
    "theorem, params",
    [
        ("quaternary-structure", 3),
        ("quaternary-structure", 4),
        ("quaternary-eta", 3),
        ("quaternary-eta", 4),
        ("additive-structure", (4, 3)),
        ("additive-structure", (4, 4)),
        ("additive-eta", (4, 2)),
        ("additive-eta", (4, 3)),
        ("span-bounds", (3, 3)),
        ("nonextended", (3, 2)),
        ("nonextended", (4, 3)),
    ],
)
def test_theorems_hold_over_permutations(theorem, params):
    rep = verify_bound_theorem(theorem, params, budget=2000, seed=1)
    assert rep.passed, str(rep)
    assert rep.counterexample is None


def test_nonextended_reports_the_exception():
    rep = verify_bound_theorem("nonextended", (4, 3))
    assert rep.missing == [CodeType(7, 4, 5, 1, 2)]
    assert "refuted (7,4;5,1;2)" in rep.lines


def test_unknown_theorem_and_params():
    with pytest.raises(ValueError):
        verify_bound_theorem("nope", 3)
    with pytest.raises(ValueError):
        verify_bound_theorem("additive-eta", (5, 2))
    with pytest.raises(ValueError):
        verify_bound_theorem("quaternary-eta", 6)
    assert len(THEOREMS) == 6


def test_sign_flips_break_the_quaternary_bounds():
    rep = verify_bound_theorem("quaternary-eta", 4, budget=3000, seed=0, use_signs=True)
    assert not rep.passed
    w = rep.counterexample
    C = AdditiveCode.from_parity_check(extended_perfect_z4_dual(4, 1))
    assert w.replay(C, C)
    # independent check: intersect the explicit codeword sets
    D = apply_monomial(C, w.monomial)
    common = codeword_set(C.gens) & codeword_set(D.gens)
    assert len(common) == w.eta == 2 ** 7
    # the flipped code loses the all-ones parity check the bound relies on
    ones = MixedVector.from_ints([], [1] * 8)
    assert contains(dual(C), ones)
    assert not contains(dual(D), ones)


def test_printed_signed_counterexample():
    C = AdditiveCode.from_parity_check(extended_perfect_z4_dual(4, 1))
    m = Monomial.from_cycles(0, 8, [(2, 6, 4, 7)], [2, 3, 6])
    D = apply_monomial(C, m)
    assert len(codeword_set(C.gens) & codeword_set(D.gens)) == 2 ** 7
