"""s-width structural metrics: line graphs, components, distances, centralities.

Two hyperedges are *s-adjacent* when their node sets share at least ``s``
nodes; walking across s-adjacent edges gives paths of width ``s``.  All
metrics here are read off the s-line graph: vertices are the edges with at
least ``s`` nodes (anything smaller cannot support an s-walk), adjacency is
pairwise intersection size >= s.  Node-side variants run the identical
construction on the dual hypergraph.

Distances are hop counts in the line graph (adjacent edges are at distance
1).  Centralities are reported unnormalized by default; ``normalized=True``
applies the standard scaling noted on each function.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping

from .core import Hypergraph, normalize_id
from .errors import InvalidSError, UnknownVertexError

SIDES = ("edges", "nodes")


@dataclass(frozen=True)
class SLineGraph:
    """Intersection graph at width ``s`` over hyperedges (or nodes, via the dual)."""

    s: int
    side: str
    vertices: tuple[str, ...]
    adjacency: Mapping[tuple[str, str], int]  # (u, v) with u < v -> intersection size

    def neighbors(self, v: str) -> tuple[str, ...]:
        return self._neighbor_map()[v]

    def _neighbor_map(self) -> dict[str, tuple[str, ...]]:
        cached = getattr(self, "_nbrs", None)
        if cached is None:
            nbrs: dict[str, list[str]] = {v: [] for v in self.vertices}
            for u, v in self.adjacency:
                nbrs[u].append(v)
                nbrs[v].append(u)
            cached = {v: tuple(sorted(ns)) for v, ns in nbrs.items()}
            object.__setattr__(self, "_nbrs", cached)
        return cached


def _check_s(s: int) -> int:
    if not isinstance(s, int) or isinstance(s, bool) or s < 1:
        raise InvalidSError(f"s must be a positive integer, got {s!r}")
    return s


def _check_side(side: str) -> str:
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    return side


def s_line_graph(h: Hypergraph, s: int, side: str = "edges") -> SLineGraph:
    """Build the s-line graph; vertices smaller than ``s`` are omitted."""
    _check_s(s)
    _check_side(side)
    base = h if side == "edges" else h.dual()
    node_sets = {e: frozenset(base.edge_members(e)) for e in base.edges}
    vertices = tuple(sorted(e for e, ns in node_sets.items() if len(ns) >= s))
    adjacency: dict[tuple[str, str], int] = {}
    for i, u in enumerate(vertices):
        for v in vertices[i + 1 :]:
            common = len(node_sets[u] & node_sets[v])
            if common >= s:
                adjacency[(u, v)] = common
    return SLineGraph(s, side, vertices, adjacency)


def _bfs_distances(g: SLineGraph, source: str) -> dict[str, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def _components(g: SLineGraph) -> list[tuple[str, ...]]:
    seen: set[str] = set()
    comps = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = sorted(_bfs_distances(g, v))
        seen.update(comp)
        comps.append(tuple(comp))
    return sorted(comps, key=lambda c: c[0])


def _require_vertex(g: SLineGraph, vertex) -> str:
    vid = normalize_id(vertex)
    if vid not in g._neighbor_map():
        raise UnknownVertexError(
            f"{vid!r} is not a vertex of the s={g.s} {g.side}-side line graph"
        )
    return vid


def s_connected_components(h: Hypergraph, s: int, side: str = "edges") -> list[tuple[str, ...]]:
    """Connected components of the s-line graph, each sorted, ordered by smallest member."""
    return _components(s_line_graph(h, s, side))


def s_distance(h: Hypergraph, s: int, side: str, u, v) -> int | None:
    """Hop count of the shortest s-walk between two vertices; None if unreachable."""
    g = s_line_graph(h, s, side)
    src, dst = _require_vertex(g, u), _require_vertex(g, v)
    return _bfs_distances(g, src).get(dst)


def s_eccentricity(h: Hypergraph, s: int, side: str, u) -> int:
    """Max finite s-distance from ``u`` within its component (0 for a singleton)."""
    g = s_line_graph(h, s, side)
    src = _require_vertex(g, u)
    return max(_bfs_distances(g, src).values())


def s_eccentricities(g: SLineGraph) -> dict[str, int]:
    return {v: max(_bfs_distances(g, v).values()) for v in g.vertices}


def s_diameter(h: Hypergraph, s: int, side: str = "edges") -> int | None:
    """Max eccentricity over the largest component; None when the line graph is empty.

    Ties on component size resolve to the component with the smallest member.
    """
    g = s_line_graph(h, s, side)
    comps = _components(g)
    if not comps:
        return None
    largest = max(comps, key=len)
    return max(max(_bfs_distances(g, v).values()) for v in largest)


def s_betweenness(h: Hypergraph, s: int, side: str = "edges", normalized: bool = False) -> dict[str, float]:
    """Shortest-path betweenness of the s-line graph (pair-dependency accumulation).

    Unnormalized values count unordered vertex pairs.  ``normalized=True``
    divides by (n-1)(n-2)/2 with n the line-graph vertex count.
    """
    g = s_line_graph(h, s, side)
    scores = dict.fromkeys(g.vertices, 0.0)
    for source in g.vertices:
        stack: list[str] = []
        preds: dict[str, list[str]] = {v: [] for v in g.vertices}
        sigma = dict.fromkeys(g.vertices, 0)
        sigma[source] = 1
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            stack.append(u)
            for w in g.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
                if dist[w] == dist[u] + 1:
                    sigma[w] += sigma[u]
                    preds[w].append(u)
        delta = dict.fromkeys(g.vertices, 0.0)
        while stack:
            w = stack.pop()
            for u in preds[w]:
                delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w])
            if w != source:
                scores[w] += delta[w]
    # each unordered pair was counted from both endpoints
    scores = {v: x / 2.0 for v, x in scores.items()}
    if normalized:
        n = len(g.vertices)
        scale = (n - 1) * (n - 2) / 2.0
        scores = {v: (x / scale if scale > 0 else 0.0) for v, x in scores.items()}
    return scores


def s_closeness(h: Hypergraph, s: int, side: str = "edges", normalized: bool = False) -> dict[str, float]:
    """Per-component closeness: (n_c - 1) / sum of distances; 0 for singletons.

    ``normalized=True`` applies the component-size correction (n_c - 1)/(n - 1).
    """
    g = s_line_graph(h, s, side)
    n = len(g.vertices)
    scores: dict[str, float] = {}
    for comp in _components(g):
        for v in comp:
            total = sum(_bfs_distances(g, v).values())
            value = (len(comp) - 1) / total if total > 0 else 0.0
            if normalized and n > 1:
                value *= (len(comp) - 1) / (n - 1)
            scores[v] = value
    return {v: scores[v] for v in g.vertices}


def s_harmonic(h: Hypergraph, s: int, side: str = "edges", normalized: bool = False) -> dict[str, float]:
    """Harmonic centrality: sum of 1/d over reachable vertices (unreachable adds 0).

    ``normalized=True`` divides by n - 1.
    """
    g = s_line_graph(h, s, side)
    n = len(g.vertices)
    scores = {}
    for v in g.vertices:
        total = sum((1.0 / d for d in _bfs_distances(g, v).values() if d > 0), 0.0)
        scores[v] = total / (n - 1) if normalized and n > 1 else total
    return scores


# -- JSON serialization ------------------------------------------------------

def round_sig(value: float, digits: int = 12) -> float:
    """Round to ``digits`` significant digits (stable across platforms)."""
    return float(f"{value:.{digits}g}")


def components_json(components: list[tuple[str, ...]]) -> list[list[str]]:
    return [list(c) for c in components]


def centrality_json(values: Mapping[str, float]) -> dict[str, float]:
    return {v: round_sig(float(values[v])) for v in sorted(values)}
