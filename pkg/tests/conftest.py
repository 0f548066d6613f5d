import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from bshopf.antichains import sweep
from bshopf.core import SetFamily, closure
from bshopf.graphs import SimpleGraph

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile("default")


@st.composite
def antichains(draw, min_n=0, max_n=6, max_sets=6):
    n = draw(st.integers(min_n, max_n))
    if n < 2:
        return SetFamily(n, ())
    raw = draw(st.lists(st.integers(1, (1 << n) - 1).filter(lambda m: m.bit_count() >= 2),
                        max_size=max_sets))
    kept = [m for m in set(raw) if not any(o != m and o & m == o for o in raw)]
    return SetFamily(n, tuple(sorted(kept)))


@st.composite
def building_sets(draw, min_n=0, max_n=6, max_sets=6):
    return closure(draw(antichains(min_n, max_n, max_sets)))


@st.composite
def graphs(draw, min_v=0, max_v=6):
    v = draw(st.integers(min_v, max_v))
    pairs = [(i, j) for i in range(v) for j in range(i + 1, v)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return SimpleGraph(v, tuple(chosen))


@pytest.fixture(scope="session")
def sweep_sets():
    """Building sets from the full 5-element sweep plus 1000 seeded random antichains."""
    return [closure(l) for l in sweep()]


@pytest.fixture
def rng():
    return random.Random(7)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[number])
