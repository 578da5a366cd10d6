from itertools import combinations

import pytest

from domkit.graph_core import Graph


def plain_dominating_sets(g: Graph):
    """Reference enumeration: scan every subset by size with itertools."""
    for k in range(1, g.n_vertices + 1):
        found = []
        for combo in combinations(range(g.n_vertices), k):
            covered = 0
            for v in combo:
                covered |= g.closed_nbhd[v]
            if covered == g.full_mask:
                found.append(sum(1 << v for v in combo))
        if found:
            return k, sorted(found)
    raise AssertionError("unreachable: the full vertex set dominates")


@pytest.fixture
def plain_oracle():
    return plain_dominating_sets


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
