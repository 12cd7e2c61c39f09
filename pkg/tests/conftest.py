import random
from itertools import combinations

import pytest

from nbhdpoly.graph import from_edge_list


def all_graphs(n):
    """Every labeled simple graph on n vertices."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield from_edge_list(n, [e for i, e in enumerate(pairs) if mask >> i & 1])


def random_graph(rng, n, p=None):
    if p is None:
        p = rng.random()
    return from_edge_list(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def naive_neighborhood_counts(G):
    """Independent brute force: test every subset against every neighborhood."""
    counts = [0] * (G.n + 1)
    nbrs = [set(a) for a in G.adjacency]
    for r in range(G.n + 1):
        for S in combinations(range(G.n), r):
            if any(set(S) <= a for a in nbrs):
                counts[r] += 1
    return counts


@pytest.fixture
def rng():
    return random.Random(20240611)


# acceptance reporting: one PASS/FAIL line per criterion at the end of the run

_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    _ACCEPTANCE.append((number, title, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
