import numpy as np
import pytest
from hypothesis import strategies as st

from z2z4.algebra import MixedMatrix, MixedVector
from z2z4.config import settings

# filled by test_acceptance, printed at the end of the run
ACCEPTANCE = {}


@st.composite
def shapes(draw, max_alpha=4, max_beta=5, max_total=None):
    a = draw(st.integers(0, max_alpha))
    b = draw(st.integers(0 if a else 1, max_beta))
    if max_total is not None:
        b = min(b, max((max_total - a) // 2, 0 if a else 1))
    return a, b


@st.composite
def vectors(draw, alpha, beta):
    bits = draw(st.lists(st.integers(0, 1), min_size=alpha, max_size=alpha))
    quats = draw(st.lists(st.integers(0, 3), min_size=beta, max_size=beta))
    return MixedVector(tuple(bits), tuple(quats))


@st.composite
def matrices(draw, alpha, beta, max_rows=5):
    n = draw(st.integers(0, max_rows))
    return MixedMatrix(alpha, beta, [draw(vectors(alpha, beta)) for _ in range(n)])


@st.composite
def shaped_matrices(draw, max_alpha=4, max_beta=4, max_rows=5):
    a, b = draw(shapes(max_alpha, max_beta))
    return draw(matrices(a, b, max_rows))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(autouse=True)
def _restore_settings():
    saved = (settings.guard_log2, settings.orbit_ceiling_log2, settings.workers)
    yield
    settings.guard_log2, settings.orbit_ceiling_log2, settings.workers = saved


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
