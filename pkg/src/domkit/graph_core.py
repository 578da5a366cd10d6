"""Labeled small graphs stored as per-vertex bitmasks.

Vertex sets are plain ``int`` masks: bit ``v`` is set when vertex ``v`` belongs
to the set.  Every family the toolkit knows about is built from a short
family string such as ``"prism:10"`` or ``"kbipartite:3,3"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .exceptions import FamilySpecError

MAX_VERTICES = 64

VertexSet = int


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        return f"{self.kind}:{','.join(str(p) for p in self.params)}"


# kind -> (number of integer parameters, minimum value of each parameter)
_FAMILIES: dict[str, tuple[int, tuple[int, ...]]] = {
    "prism": (1, (3,)),
    "cycle": (1, (3,)),
    "path": (1, (1,)),
    "ladder": (1, (2,)),
    "complete": (1, (1,)),
    "star": (1, (2,)),
    "wheel": (1, (4,)),
    "fan": (1, (2,)),
    "kbipartite": (2, (1, 1)),
    "house": (0, ()),
    "bintree": (1, (1,)),
}

_SPEC_RE = re.compile(r"^([a-z]+)(?::(\d+(?:,\d+)*))?$")


def parse_family(text: str) -> FamilySpec:
    """Parse a family string like ``"prism:5"`` into a :class:`FamilySpec`."""
    m = _SPEC_RE.match(text.strip())
    if m is None:
        raise FamilySpecError(f"malformed family spec {text!r}")
    kind, raw = m.group(1), m.group(2)
    if kind not in _FAMILIES:
        known = ", ".join(sorted(_FAMILIES))
        raise FamilySpecError(f"unknown family {kind!r} (known: {known})")
    arity, minima = _FAMILIES[kind]
    params = tuple(int(p) for p in raw.split(",")) if raw else ()
    if len(params) != arity:
        raise FamilySpecError(
            f"family {kind!r} takes {arity} parameter(s), got {len(params)}"
        )
    for p, lo in zip(params, minima):
        if p < lo:
            raise FamilySpecError(f"{kind}: parameter {p} below minimum {lo}")
    spec = FamilySpec(kind, params)
    if _order(spec) > MAX_VERTICES:
        raise FamilySpecError(
            f"{spec} has {_order(spec)} vertices; at most {MAX_VERTICES} supported"
        )
    return spec


def _order(spec: FamilySpec) -> int:
    k, p = spec.kind, spec.params
    if k in ("prism", "ladder"):
        return 2 * p[0]
    if k == "kbipartite":
        return p[0] + p[1]
    if k == "house":
        return 5
    return p[0]


@dataclass(frozen=True)
class Graph:
    """Immutable undirected graph on vertices ``0..n_vertices-1``."""

    n_vertices: int
    adjacency: tuple[VertexSet, ...]
    closed_nbhd: tuple[VertexSet, ...]
    family_tag: str = ""

    @classmethod
    def from_edges(
        cls, n_vertices: int, edges: Iterable[tuple[int, int]], family_tag: str = ""
    ) -> "Graph":
        if not 1 <= n_vertices <= MAX_VERTICES:
            raise ValueError(f"vertex count {n_vertices} outside 1..{MAX_VERTICES}")
        adj = [0] * n_vertices
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise ValueError(f"edge ({u}, {v}) out of range")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        closed = tuple(a | (1 << v) for v, a in enumerate(adj))
        return cls(n_vertices, tuple(adj), closed, family_tag)

    @property
    def full_mask(self) -> VertexSet:
        return (1 << self.n_vertices) - 1

    def degree(self, v: int) -> int:
        return popcount(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n_vertices)]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, ascending."""
        for u in range(self.n_vertices):
            higher = self.adjacency[u] >> (u + 1)
            v = u + 1
            while higher:
                if higher & 1:
                    yield (u, v)
                higher >>= 1
                v += 1

    @property
    def n_edges(self) -> int:
        return sum(self.degrees()) // 2

    def is_prism(self) -> bool:
        return self.family_tag.startswith("prism:")

    def vertex_label(self, v: int) -> str:
        if self.is_prism():
            n = self.n_vertices // 2
            return f"t_{v}" if v < n else f"b_{v - n}"
        return f"v_{v}"

    def parse_vertex(self, label: str) -> int:
        for v in range(self.n_vertices):
            if self.vertex_label(v) == label:
                return v
        raise ValueError(f"no vertex labeled {label!r} in {self.family_tag or 'graph'}")

    def format_set(self, s: VertexSet) -> str:
        """Render a vertex set in the usual listing style, e.g. ``{b_0,t_2}``."""
        labels = sorted(self.vertex_label(v) for v in iter_bits(s))
        return "{" + ",".join(labels) + "}"

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n_vertices))
        g.add_edges_from(self.edges())
        return g


def iter_bits(mask: int) -> Iterator[int]:
    v = 0
    while mask:
        if mask & 1:
            yield v
        mask >>= 1
        v += 1


def popcount(mask: int) -> int:
    return mask.bit_count()


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def build_family(spec: FamilySpec | str) -> Graph:
    """Build the labeled graph for a family string or parsed spec.

    Labeling conventions: prism ``t_i -> i``, ``b_i -> n+i``; ladder uses the
    same two-row layout; wheel, fan and star put the hub at vertex 0; the
    binary tree is heap-indexed; the house is the 4-cycle 0-1-2-3 with the
    apex 4 joined to 0 and 1.
    """
    if isinstance(spec, str):
        spec = parse_family(spec)
    k, p = spec.kind, spec.params
    tag = str(spec)
    edges: list[tuple[int, int]] = []
    if k == "prism":
        n = p[0]
        for i in range(n):
            j = (i + 1) % n
            edges += [(i, j), (n + i, n + j), (i, n + i)]
    elif k == "ladder":
        n = p[0]
        for i in range(n):
            edges.append((i, n + i))
            if i + 1 < n:
                edges += [(i, i + 1), (n + i, n + i + 1)]
    elif k == "cycle":
        n = p[0]
        edges = [(i, (i + 1) % n) for i in range(n)]
    elif k == "path":
        edges = [(i, i + 1) for i in range(p[0] - 1)]
    elif k == "complete":
        edges = [(i, j) for i in range(p[0]) for j in range(i + 1, p[0])]
    elif k == "star":
        edges = [(0, i) for i in range(1, p[0])]
    elif k == "wheel":
        rim = p[0] - 1
        edges = [(0, i) for i in range(1, p[0])]
        edges += [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    elif k == "fan":
        edges = [(0, i) for i in range(1, p[0])]
        edges += [(i, i + 1) for i in range(1, p[0] - 1)]
    elif k == "kbipartite":
        m, n = p
        edges = [(i, m + j) for i in range(m) for j in range(n)]
    elif k == "house":
        edges = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)]
    elif k == "bintree":
        edges = [((v - 1) // 2, v) for v in range(1, p[0])]
    else:  # pragma: no cover - parse_family rejects unknown kinds
        raise FamilySpecError(f"unknown family {k!r}")
    return Graph.from_edges(_order(spec), edges, tag)


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    if not 0 <= v < g.n_vertices:
        raise IndexError(f"vertex {v} out of range for {g.n_vertices} vertices")
    return g.closed_nbhd[v]


def is_connected(g: Graph, removed: VertexSet = 0) -> bool:
    """Whether ``g`` minus the vertices in ``removed`` is connected."""
    alive = g.full_mask & ~removed
    if not alive:
        return True
    start = alive & -alive
    seen = start
    frontier = start
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= g.adjacency[v]
        frontier = reach & alive & ~seen
        seen |= frontier
    return seen == alive


def to_dot(g: Graph) -> str:
    name = g.family_tag or "G"
    lines = [f'graph "{name}" {{']
    for v in range(g.n_vertices):
        lines.append(f'  {v} [label="{g.vertex_label(v)}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
