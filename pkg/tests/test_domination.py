from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domkit.domination import (
    dominating_sets_of_size,
    is_dominating,
    load_profile,
    min_overlap,
    solve,
)
from domkit.exceptions import BudgetExceededError
from domkit.graph_core import Graph, build_family, iter_bits, mask_of


@st.composite
def small_graphs(draw):
    n = draw(st.integers(1, 9))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


def test_is_dominating_examples():
    g = build_family("prism:4")
    assert is_dominating(g, mask_of([g.parse_vertex("b_0"), g.parse_vertex("t_2")]))
    assert not is_dominating(g, 0)
    assert is_dominating(g, g.full_mask)


@pytest.mark.parametrize(
    "spec, gamma, zeta",
    [("prism:4", 2, 4), ("complete:6", 1, 6), ("prism:6", 4, 51), ("prism:3", 2, 9),
     ("path:6", 2, 1), ("cycle:6", 2, 3), ("house", 2, 7), ("path:1", 1, 1)],
)
def test_solve_examples(spec, gamma, zeta):
    r = solve(build_family(spec))
    assert (r.gamma, r.zeta) == (gamma, zeta)


@settings(max_examples=200, deadline=None)
@given(small_graphs())
def test_solve_matches_plain_enumeration(g):
    from conftest import plain_dominating_sets

    gamma, sets = plain_dominating_sets(g)
    r = solve(g)
    assert r.gamma == gamma
    assert list(r.sets) == sets


@pytest.mark.parametrize("n", range(3, 9))
def test_prism_matches_plain_enumeration(n, plain_oracle):
    g = build_family(f"prism:{n}")
    gamma, sets = plain_oracle(g)
    r = solve(g)
    assert (r.gamma, list(r.sets)) == (gamma, sets)


@pytest.mark.parametrize("spec", ["prism:9", "prism:12", "house", "kbipartite:3,3", "bintree:6"])
def test_nothing_smaller_dominates(spec):
    g = build_family(spec)
    r = solve(g)
    assert dominating_sets_of_size(g, r.gamma - 1) == []
    for s in r.sets:
        assert is_dominating(g, s)
        assert s.bit_count() == r.gamma
    assert list(r.sets) == sorted(set(r.sets))


def test_budget_guard():
    with pytest.raises(BudgetExceededError):
        solve(build_family("prism:14"), budget=50)


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("DOMKIT_BUDGET", "5")
    with pytest.raises(BudgetExceededError):
        solve(build_family("prism:10"))


@pytest.mark.parametrize("spec, tau", [("prism:3", 3), ("complete:6", 1), ("star:6", 1), ("kbipartite:2,3", 4)])
def test_load_profile(spec, tau):
    g = build_family(spec)
    r = solve(g)
    prof = load_profile(r, g.n_vertices)
    assert prof.tau == tau
    assert sum(prof.per_vertex) == r.gamma * r.zeta
    assert prof.tau <= r.zeta
    for v in range(g.n_vertices):
        assert prof.per_vertex[v] == sum(1 for s in r.sets if s >> v & 1)


@pytest.mark.parametrize(
    "spec, omega",
    [("cycle:6", Fraction(0)), ("bintree:5", Fraction(1, 2)), ("path:6", Fraction(1)),
     ("bintree:6", Fraction(1, 2))],
)
def test_min_overlap(spec, omega):
    assert min_overlap(solve(build_family(spec))) == omega


@settings(max_examples=100, deadline=None)
@given(small_graphs())
def test_min_overlap_brute(g):
    r = solve(g)
    if r.zeta == 1:
        expected = Fraction(1)
    else:
        expected = min(
            Fraction(len(set(iter_bits(s)) & set(iter_bits(t))), r.gamma)
            for i, s in enumerate(r.sets) for t in r.sets[i + 1:]
        )
    assert min_overlap(r) == expected
