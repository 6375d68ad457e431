"""
The fourteen acceptance criteria, one test each, with their time limits.

Each test records a one-line verdict that is printed in the terminal
summary.  Claims about sign-flip monomials that do not hold are kept as
strict expected failures next to the criterion they belong to.
"""

import time
from contextlib import contextmanager
from pathlib import Path

import pytest

from conftest import ACCEPTANCE
from z2z4.algebra import CodeType
from z2z4.code import AdditiveCode, Monomial
from z2z4.constructions import double_additive, paper_matrix
from z2z4.duality import dual
from z2z4.lattice import eta
from z2z4.reproduce import reproduce
from z2z4.search import RefutedByExhaustion, SearchTask, enumerate_types, replay, search

GOLDEN = Path(__file__).parent / "golden"


@contextmanager
def criterion(n, title, limit=None):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        dt = time.perf_counter() - start
        if ok and limit is not None and dt > limit:
            ok = False
        bound = f" (limit {limit:g}s)" if limit is not None else ""
        ACCEPTANCE[n] = f"[{'PASS' if ok else 'FAIL'}] {n:2d}. {title}: {dt:.2f}s{bound}"
    assert dt <= (limit if limit is not None else float("inf")), f"took {dt:.1f}s, limit {limit}s"


def _code(name):
    return AdditiveCode.from_parity_check(paper_matrix(name))


def _golden(target):
    res = reproduce(target)
    assert res.passed, res.text()
    assert res.text() == (GOLDEN / f"{target}.txt").read_text()
    return res


EXBETA4 = {
    ("qlpc-t3-H1", "qlpc-t3-H1"): {CodeType(0, 4, 2, 1)},
    ("qlpc-t3-H2", "qlpc-t3-H2"): {CodeType(0, 4, 0, 2), CodeType(0, 4, 0, 3)},
    ("qlpc-t3-H1", "qlpc-t3-H2"): {CodeType(0, 4, 1, 2)},
}


def test_01_exbeta4_classification():
    with criterion(1, "beta=4 classification over all 24 permutations", 1.0):
        for (n1, n2), want in EXBETA4.items():
            assert set(enumerate_types(_code(n1), _code(n2), "exhaustive")) == want


@pytest.mark.xfail(strict=True, reason="sign flips reach further types; see the decisions ledger")
def test_01_exbeta4_classification_with_signs():
    for (n1, n2), want in EXBETA4.items():
        assert set(enumerate_types(_code(n1), _code(n2), "exhaustive", use_signs=True)) == want


def test_02_t3_intersection_numbers():
    with criterion(2, "t=3 intersection numbers 16, 8, 4"):
        A, B = _code("qlpc-t3-H2"), _code("qlpc-t3-H1")
        swap = Monomial.from_cycles(0, 4, [(1, 2)])
        assert eta(A, A) == 16
        assert eta(A, B) == 8
        assert replay(A, A, swap).eta == 4
        _golden("teorema5-t3")


def test_03_quaternary_eta_bounds_t4():
    with criterion(3, "t=4 log2 eta in [8,11] over 10^4 seeded permutations", 30.0):
        _golden("bounds-quaternary-t4")


@pytest.mark.xfail(strict=True, reason="sign flips push log2 eta below 8; see the decisions ledger")
def test_03_quaternary_eta_bounds_t4_with_signs():
    from z2z4.verify import verify_bound_theorem

    assert verify_bound_theorem("quaternary-eta", 4, 10_000, 0, use_signs=True).passed


def test_04_teorema5_t4_achievability():
    with criterion(4, "t=4 witnesses for l = 5..8", 60.0):
        res = _golden("teorema5-t4")
        assert sum(line.startswith("l=") for line in res.lines) == 4


def test_05_doubling_lemmas():
    with criterion(5, "doubling and quadrupling type arithmetic and proof permutations"):
        res = _golden("lemmas")
        assert not any("MISMATCH" in line for line in res.lines)


def test_06_exbeta4_z2z4_table():
    with criterion(6, "(4,2) table rows and no further types"):
        res = _golden("exbeta4-z2z4")
        C = _code("sec4-exbeta4-H2")
        table = {CodeType(4, 2, g, 1, k) for g, k in [(2, 2), (3, 2), (3, 3), (4, 3)]}
        assert set(enumerate_types(C, C)) == table
        assert set(enumerate_types(C, C, use_signs=True)) == table
        assert len(res.lines) == 6


def test_07_additive_g1_table():
    with criterion(7, "(4,6;1,2) table, ten rows replayed", 10.0):
        _golden("additive-g1")


def test_08_exceptional_nonexistence():
    with criterion(8, "(8,4;6,1;3) refuted over permutations, 7-cycle gives (8,4;6,1;6)", 300.0):
        C = AdditiveCode.from_parity_check(double_additive(paper_matrix("sec4-exbeta4-H2")))
        assert dual(C).ctype == CodeType(8, 4, 3, 1, 3)
        out = search(SearchTask(C, C, CodeType(8, 4, 6, 1, 3), mode="exhaustive"))
        assert isinstance(out, RefutedByExhaustion)
        assert out.orbit_size == 967680
        w = replay(C, C, Monomial.from_cycles(8, 4, [(1, 8, 7, 6, 5, 4, 3)]))
        assert w.achieved == CodeType(8, 4, 6, 1, 6)
        _golden("structure-additive-t4")


@pytest.mark.xfail(strict=True, reason="a sign flip reaches (8,4;6,1;3); see the decisions ledger")
def test_08_exceptional_nonexistence_with_signs():
    C = AdditiveCode.from_parity_check(double_additive(paper_matrix("sec4-exbeta4-H2")))
    out = search(SearchTask(C, C, CodeType(8, 4, 6, 1, 3), mode="exhaustive", use_signs=True))
    assert isinstance(out, RefutedByExhaustion)


def test_09_nonextended_7_4():
    with criterion(9, "(7,4;5,1;2) refuted, all other admissible types reached", 300.0):
        res = _golden("nonextended-7-4")
        assert "refuted (7,4;5,1;2)" in res.lines
        assert not any(line.startswith("not reached") for line in res.lines)


def test_10_duality_oracle():
    with criterion(10, "dual equals brute-force annihilator on 200 codes"):
        _golden("duality-oracle")


def test_11_intersection_oracle():
    with criterion(11, "intersection equals set intersection on 200 pairs"):
        _golden("intersection-oracle")


def test_12_perfect_certification():
    with criterion(12, "perfect and extended perfect families certified", 120.0):
        res = _golden("perfect-certification")
        assert len(res.lines) == 7 + 2 * 5


def test_13_hamming_t4():
    with criterion(13, "Hamming t=4 eta set {2^(15-r) : r = 4..8}"):
        res = _golden("hamming-t4")
        assert res.lines[0] == "log2 eta: 7, 8, 9, 10, 11"


def test_14_atlas_t5():
    with criterion(14, "t=5 atlas covers every admissible cell", 1800.0):
        res = _golden("atlas-t5")
        assert not any("missing" in line or "outside" in line for line in res.lines)
        assert sum(line.startswith("pair ") for line in res.lines) == 6
