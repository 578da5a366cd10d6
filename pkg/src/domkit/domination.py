"""Exact minimum dominating set enumeration by pruned subset search.

The search walks k-combinations of vertex ids in lexicographic order and
yields exactly the dominating ones, so its output is what a plain scan over
``itertools.combinations(range(n), k)`` would produce.  Two cuts keep it
fast without changing the result:

* every vertex not yet dominated must still be reachable from some vertex
  larger than the last pick, so the next pick may not exceed
  ``min(max N[u])`` over undominated ``u``;
* the remaining picks can dominate at most ``(Δ+1)`` new vertices each.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import BudgetExceededError
from .graph_core import Graph, VertexSet, iter_bits, popcount

DEFAULT_BUDGET = 2**31


def default_budget() -> int:
    raw = os.environ.get("DOMKIT_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass(frozen=True)
class DominionResult:
    gamma: int
    zeta: int
    sets: tuple[VertexSet, ...]

    def __post_init__(self):
        if len(self.sets) != self.zeta:
            raise ValueError("zeta must equal the number of listed sets")


@dataclass(frozen=True)
class LoadProfile:
    per_vertex: tuple[int, ...]
    tau: int


def is_dominating(g: Graph, s: VertexSet) -> bool:
    covered = 0
    for v in iter_bits(s):
        covered |= g.closed_nbhd[v]
    return covered == g.full_mask


class _Counter:
    __slots__ = ("tests", "budget")

    def __init__(self, budget: int):
        self.tests = 0
        self.budget = budget

    def tick(self) -> None:
        self.tests += 1
        if self.tests > self.budget:
            raise BudgetExceededError(
                f"search exceeded budget of {self.budget} subset tests"
            )


def dominating_sets_of_size(
    g: Graph, k: int, budget: int | None = None, _counter: _Counter | None = None
) -> list[VertexSet]:
    """All dominating sets with exactly ``k`` vertices, in lexicographic order."""
    n = g.n_vertices
    if k < 0 or k > n:
        return []
    counter = _counter or _Counter(default_budget() if budget is None else budget)
    full = g.full_mask
    closed = g.closed_nbhd
    max_nbr = [c.bit_length() - 1 for c in closed]
    cap = max(popcount(c) for c in closed)
    found: list[VertexSet] = []

    def extend(start: int, picked: VertexSet, covered: VertexSet, left: int) -> None:
        counter.tick()
        missing = full & ~covered
        if not missing:
            if left == 0:
                found.append(picked)
            elif n - start >= left:
                # already dominating: any completion works, still counted per set
                _complete(start, picked, left)
            return
        if left == 0 or popcount(missing) > left * cap:
            return
        hi = min(max_nbr[u] for u in iter_bits(missing))
        hi = min(hi, n - left)
        for v in range(start, hi + 1):
            extend(v + 1, picked | (1 << v), covered | closed[v], left - 1)

    def _complete(start: int, picked: VertexSet, left: int) -> None:
        if left == 0:
            counter.tick()
            found.append(picked)
            return
        for v in range(start, n - left + 1):
            _complete(v + 1, picked | (1 << v), left - 1)

    extend(0, 0, 0, k)
    return found


def solve(g: Graph, budget: int | None = None) -> DominionResult:
    """Domination number, dominion and every minimum dominating set of ``g``.

    Sets are labeled (no symmetry quotient) and sorted by mask value.
    """
    counter = _Counter(default_budget() if budget is None else budget)
    max_closed = max(popcount(c) for c in g.closed_nbhd)
    k = -(-g.n_vertices // max_closed)
    while True:
        sets = dominating_sets_of_size(g, k, _counter=counter)
        if sets:
            sets.sort()
            return DominionResult(k, len(sets), tuple(sets))
        k += 1


def load_profile(r: DominionResult, n_vertices: int) -> LoadProfile:
    counts = [0] * n_vertices
    for s in r.sets:
        for v in iter_bits(s):
            counts[v] += 1
    return LoadProfile(tuple(counts), max(counts))


def min_overlap(r: DominionResult) -> Fraction:
    """Smallest ``|S ∩ T| / γ`` over distinct minimum dominating sets.

    A graph with a single minimum dominating set gets overlap 1.
    """
    if r.zeta == 1:
        return Fraction(1)
    best = r.gamma
    sets = r.sets
    for i, s in enumerate(sets):
        for t in sets[i + 1 :]:
            shared = popcount(s & t)
            if shared < best:
                best = shared
                if best == 0:
                    return Fraction(0)
    return Fraction(best, r.gamma)
