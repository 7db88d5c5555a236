import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from pathlength import from_edge_list

settings.register_profile("default", deadline=None)
settings.load_profile("default")

G1_EDGES = [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]
G2_EDGES = [(1, 3), (2, 3)]


@pytest.fixture
def g1():
    return from_edge_list(G1_EDGES, 5, directed=False)


@pytest.fixture
def g2():
    return from_edge_list(G2_EDGES, 3, directed=False)


@pytest.fixture
def g2_tilde():
    return from_edge_list([(1, 3, 1.0), (2, 3, 0.5)], 3, directed=False)


@st.composite
def adjacency(draw, min_n=2, max_n=8, directed=None, weighted=None, connected=False):
    """Dense weight matrices with dyadic weights (exact float path sums)."""
    n = draw(st.integers(min_n, max_n))
    directed = draw(st.booleans()) if directed is None else directed
    weighted = draw(st.booleans()) if weighted is None else weighted
    if weighted:
        vals = st.sampled_from([0.0, 0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.75])
    else:
        vals = st.sampled_from([0.0, 1.0])
    flat = draw(st.lists(vals, min_size=n * n, max_size=n * n))
    w = np.array(flat).reshape(n, n)
    np.fill_diagonal(w, 0.0)
    if not directed:
        w = np.triu(w, 1)
        w = w + w.T
    if connected:
        # a ring guarantees strong connectivity
        for i in range(n):
            j = (i + 1) % n
            if w[i, j] == 0:
                w[i, j] = 1.0
                if not directed:
                    w[j, i] = 1.0
    return w, directed


# --- acceptance summary: one line per criterion ------------------------------

_CRITERIA: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        outcome = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
        _CRITERIA[marker] = outcome


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    m = item.get_closest_marker("criterion")
    if m is not None:
        outcome.get_result().criterion = m.args


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), outcome in sorted(_CRITERIA.items()):
        terminalreporter.write_line(f"[{outcome}] criterion {number}: {title}")
