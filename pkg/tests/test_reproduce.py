from pathlib import Path

import pytest

from z2z4.config import settings
from z2z4.reproduce import TARGETS, reproduce

GOLDEN = Path(__file__).parent / "golden"
# the atlas is slow and is checked against its golden file in test_acceptance
FAST = [t for t in TARGETS if t != "atlas-t5"]


@pytest.mark.parametrize("target", FAST)
def test_matches_golden(target):
    res = reproduce(target)
    assert res.passed, res.text()
    assert res.text() == (GOLDEN / f"{target}.txt").read_text()


@pytest.mark.parametrize("target", ["exbeta4", "structure-additive-t4", "nonextended-7-4"])
def test_stable_across_worker_counts(target):
    settings.workers = 2
    assert reproduce(target).text() == (GOLDEN / f"{target}.txt").read_text()


def test_every_target_has_a_golden_file():
    assert {p.stem for p in GOLDEN.glob("*.txt")} == set(TARGETS)


def test_unknown_target():
    with pytest.raises(KeyError):
        reproduce("nope")
