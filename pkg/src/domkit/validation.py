"""Input coercion shared by the estimators and the CLI."""

from __future__ import annotations

from typing import Any, Iterable

from .graph_core import MAX_VERTICES, FamilySpec, Graph, build_family


def check_graph(x: Any) -> Graph:
    """Coerce a family string, :class:`FamilySpec`, :class:`Graph` or networkx graph."""
    if isinstance(x, Graph):
        return x
    if isinstance(x, (str, FamilySpec)):
        return build_family(x)
    if hasattr(x, "nodes") and hasattr(x, "edges"):
        if x.is_directed():
            raise TypeError("directed graphs are not supported")
        nodes = list(x.nodes)
        if not 1 <= len(nodes) <= MAX_VERTICES:
            raise ValueError(f"graph must have 1..{MAX_VERTICES} vertices")
        index = {v: i for i, v in enumerate(nodes)}
        edges = [(index[u], index[v]) for u, v in x.edges if u != v]
        return Graph.from_edges(len(nodes), edges, family_tag=str(x.graph.get("name", "")))
    raise TypeError(f"cannot interpret {type(x).__name__} as a graph")


def check_graphs(xs: Any) -> list[Graph]:
    """Coerce a single graph or an iterable of graphs to a list."""
    if isinstance(xs, (str, FamilySpec, Graph)) or hasattr(xs, "nodes"):
        return [check_graph(xs)]
    if not isinstance(xs, Iterable):
        raise TypeError(f"expected a graph or an iterable of graphs, got {type(xs).__name__}")
    graphs = [check_graph(x) for x in xs]
    if not graphs:
        raise ValueError("expected at least one graph")
    return graphs


def check_vertex_set(g: Graph, s: Any) -> int:
    """Coerce a mask, label list or vertex-id list to a mask within ``g``."""
    if isinstance(s, int):
        mask = s
    else:
        mask = 0
        for v in s:
            vid = g.parse_vertex(v) if isinstance(v, str) else int(v)
            if not 0 <= vid < g.n_vertices:
                raise ValueError(f"vertex {v!r} out of range")
            mask |= 1 << vid
    if mask < 0 or mask >> g.n_vertices:
        raise ValueError("vertex set has members outside the graph")
    return mask


def check_budget(budget: Any) -> int | None:
    if budget is None:
        return None
    budget = int(budget)
    if budget < 1:
        raise ValueError("budget must be a positive integer")
    return budget
