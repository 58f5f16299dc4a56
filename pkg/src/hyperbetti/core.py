"""Immutable hypergraph data model.

A hypergraph is stored as an incidence store (one record per (edge, node)
pair) plus three property stores: nodes, edges, and the incidences
themselves.  Every store carries a weight and a free-form attribute map, so
numerical and categorical metadata can ride along with the structure.

Once built, a :class:`Hypergraph` never changes; every "mutation" (dual,
restrict, ...) returns a new value.  This makes instances safe to share
across threads and lets analytics cache results keyed by identity.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping

from .errors import (
    CsvFormatError,
    EmptyIdentifierError,
    InvalidAttributeError,
    NonFiniteWeightError,
    UnknownEdgeError,
    UnknownNodeError,
)

# Scalar attribute values: float/int, str, bool, or None.
AttrValue = Any

DEFAULT_WEIGHT = 1.0


def normalize_id(value: Any) -> str:
    """Normalize a node/edge label to its text form.

    Numeric labels become their ``str()`` rendering (``1`` -> ``"1"``).
    The text is kept verbatim (case-sensitive, whitespace preserved) but
    must be non-empty after trimming.
    """
    text = value if isinstance(value, str) else str(value)
    if not text.strip():
        raise EmptyIdentifierError(f"identifier {value!r} is empty after trimming")
    return text


def check_weight(value: Any, context: str = "weight") -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise NonFiniteWeightError(f"{context} must be a number, got {value!r}")
    w = float(value)
    if not math.isfinite(w):
        raise NonFiniteWeightError(f"{context} must be finite, got {value!r}")
    return w


def check_attrs(attrs: Mapping[str, AttrValue] | None, context: str = "attrs") -> dict[str, AttrValue]:
    """Validate an attribute map: text keys, scalar values, finite numbers."""
    if attrs is None:
        return {}
    out: dict[str, AttrValue] = {}
    for key, value in attrs.items():
        if not isinstance(key, str):
            raise InvalidAttributeError(f"{context}: attribute key {key!r} is not text")
        if value is None or isinstance(value, (str, bool)):
            out[key] = value
        elif isinstance(value, (int, float)):
            if not math.isfinite(value):
                raise NonFiniteWeightError(f"{context}[{key}]: non-finite number")
            out[key] = value
        else:
            raise InvalidAttributeError(f"{context}[{key}]: value {value!r} is not a scalar")
    return out


@dataclass(frozen=True)
class Properties:
    """Weight plus attribute map attached to a node, edge, or incidence."""

    weight: float = DEFAULT_WEIGHT
    attrs: Mapping[str, AttrValue] = field(default_factory=dict)

    @staticmethod
    def coerce(value: Any, context: str) -> "Properties":
        if isinstance(value, Properties):
            return Properties(check_weight(value.weight, context), check_attrs(value.attrs, context))
        if isinstance(value, Mapping):
            return Properties(
                check_weight(value.get("weight", DEFAULT_WEIGHT), context),
                check_attrs(value.get("attrs"), context),
            )
        raise ValueError(f"{context}: cannot build properties from {value!r}")

    def is_default(self) -> bool:
        return self.weight == DEFAULT_WEIGHT and not self.attrs


@dataclass(frozen=True)
class Incidence:
    """One (edge, node) membership pair with its own weight and attributes."""

    edge: str
    node: str
    weight: float = DEFAULT_WEIGHT
    attrs: Mapping[str, AttrValue] = field(default_factory=dict)


@dataclass(frozen=True)
class BipartiteGraph:
    """Two-part view: one vertex per node, one per edge, one link per incidence."""

    node_ids: tuple[str, ...]
    edge_ids: tuple[str, ...]
    links: tuple[tuple[str, str], ...]  # (edge id, node id)

    @property
    def vertex_count(self) -> int:
        return len(self.node_ids) + len(self.edge_ids)


class Hypergraph:
    """Immutable incidence store with node/edge/incidence property stores.

    ``incidences`` may mix :class:`Incidence` objects and tuples of the form
    ``(edge, node)``, ``(edge, node, weight)``, or ``(edge, node, weight,
    attrs)``.  Duplicate (edge, node) pairs collapse to a single incidence
    keeping the last-supplied weight and attrs.  ``node_props`` and
    ``edge_props`` register extra entities (isolated nodes, empty edges) and
    attach metadata; entities referenced by incidences are registered
    automatically with default properties.
    """

    __slots__ = ("_members", "_node_props", "_edge_props", "_name")

    def __init__(
        self,
        incidences: Iterable[Any] = (),
        node_props: Mapping[Any, Any] | None = None,
        edge_props: Mapping[Any, Any] | None = None,
        name: str = "",
    ):
        collected: dict[tuple[str, str], Incidence] = {}
        for item in incidences:
            inc = self._coerce_incidence(item)
            collected[(inc.edge, inc.node)] = inc

        nprops: dict[str, Properties] = {}
        eprops: dict[str, Properties] = {}
        for raw_id, value in (node_props or {}).items():
            nprops[normalize_id(raw_id)] = Properties.coerce(value, f"node {raw_id!r}")
        for raw_id, value in (edge_props or {}).items():
            eprops[normalize_id(raw_id)] = Properties.coerce(value, f"edge {raw_id!r}")
        for edge, node in collected:
            nprops.setdefault(node, Properties())
            eprops.setdefault(edge, Properties())

        members: dict[str, dict[str, Incidence]] = {e: {} for e in sorted(eprops)}
        for (edge, node), inc in sorted(collected.items()):
            members[edge][node] = inc

        self._members = members
        self._node_props = {n: nprops[n] for n in sorted(nprops)}
        self._edge_props = {e: eprops[e] for e in sorted(eprops)}
        self._name = name

    @staticmethod
    def _coerce_incidence(item: Any) -> Incidence:
        if isinstance(item, Incidence):
            edge, node = item.edge, item.node
            weight, attrs = item.weight, item.attrs
        else:
            parts = tuple(item)
            if not 2 <= len(parts) <= 4:
                raise ValueError(f"incidence {item!r}: expected (edge, node[, weight[, attrs]])")
            edge, node = parts[0], parts[1]
            weight = parts[2] if len(parts) >= 3 and parts[2] is not None else DEFAULT_WEIGHT
            attrs = parts[3] if len(parts) == 4 else {}
        edge_id, node_id = normalize_id(edge), normalize_id(node)
        context = f"incidence ({edge_id}, {node_id})"
        return Incidence(edge_id, node_id, check_weight(weight, context), check_attrs(attrs, context))

    # -- accessors ---------------------------------------------------------

    @property
    def name(self) -> str:
        return self._name

    @property
    def nodes(self) -> tuple[str, ...]:
        return tuple(self._node_props)

    @property
    def edges(self) -> tuple[str, ...]:
        return tuple(self._edge_props)

    @property
    def incidences(self) -> tuple[Incidence, ...]:
        return tuple(inc for edge in self._members.values() for inc in edge.values())

    @property
    def num_nodes(self) -> int:
        return len(self._node_props)

    @property
    def num_edges(self) -> int:
        return len(self._edge_props)

    @property
    def num_incidences(self) -> int:
        return sum(len(m) for m in self._members.values())

    def has_node(self, node: str) -> bool:
        return node in self._node_props

    def has_edge(self, edge: str) -> bool:
        return edge in self._edge_props

    def edge_members(self, edge: str) -> tuple[str, ...]:
        """Node ids contained in ``edge`` (sorted)."""
        if edge not in self._members:
            raise UnknownEdgeError(f"edge {edge!r} is not registered")
        return tuple(self._members[edge])

    def node_memberships(self, node: str) -> tuple[str, ...]:
        """Edge ids containing ``node`` (sorted)."""
        if node not in self._node_props:
            raise UnknownNodeError(f"node {node!r} is not registered")
        return tuple(e for e, m in self._members.items() if node in m)

    def node_properties(self, node: str) -> Properties:
        if node not in self._node_props:
            raise UnknownNodeError(f"node {node!r} is not registered")
        return self._node_props[node]

    def edge_properties(self, edge: str) -> Properties:
        if edge not in self._edge_props:
            raise UnknownEdgeError(f"edge {edge!r} is not registered")
        return self._edge_props[edge]

    def incidence(self, edge: str, node: str) -> Incidence:
        if edge not in self._members:
            raise UnknownEdgeError(f"edge {edge!r} is not registered")
        if node not in self._members[edge]:
            raise UnknownNodeError(f"node {node!r} is not a member of edge {edge!r}")
        return self._members[edge][node]

    def isolated_nodes(self) -> tuple[str, ...]:
        covered = {inc.node for inc in self.incidences}
        return tuple(n for n in self._node_props if n not in covered)

    def empty_edges(self) -> tuple[str, ...]:
        return tuple(e for e, m in self._members.items() if not m)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (
            self._name == other._name
            and self._node_props == other._node_props
            and self._edge_props == other._edge_props
            and self._members == other._members
        )

    def __hash__(self):  # identity hashing: value equality is deep
        return id(self)

    def __repr__(self) -> str:
        return (
            f"Hypergraph(name={self._name!r}, nodes={self.num_nodes}, "
            f"edges={self.num_edges}, incidences={self.num_incidences})"
        )

    # -- structural operations ---------------------------------------------

    def dual(self) -> "Hypergraph":
        """Transpose the set system: each incidence (e, n) becomes (n, e).

        Node and edge property stores swap roles, so isolated nodes become
        empty edges and vice versa.
        """
        flipped = [Incidence(inc.node, inc.edge, inc.weight, inc.attrs) for inc in self.incidences]
        return Hypergraph(flipped, node_props=self._edge_props, edge_props=self._node_props, name=self._name)

    def toplexes(self) -> tuple[str, ...]:
        """Ids of maximal edges: not strictly contained in another edge's node set."""
        node_sets = {e: frozenset(m) for e, m in self._members.items()}
        result = []
        for e, members in node_sets.items():
            if not any(members < other for f, other in node_sets.items() if f != e):
                result.append(e)
        return tuple(result)

    def degree(self, node: Any, s: int = 1) -> int:
        """Number of edges containing ``node`` with at least ``s`` nodes."""
        node_id = normalize_id(node)
        if node_id not in self._node_props:
            raise UnknownNodeError(f"node {node_id!r} is not registered")
        return sum(1 for m in self._members.values() if node_id in m and len(m) >= s)

    def restrict(
        self,
        keep_nodes: Iterable[Any] | None = None,
        keep_edges: Iterable[Any] | None = None,
    ) -> "Hypergraph":
        """Sub-hypergraph retaining only incidences whose edge and node survive.

        ``keep_edges=None`` keeps every edge registered (edges emptied by node
        removal stay as empty edges).  ``keep_nodes=None`` keeps exactly the
        nodes covered by the surviving incidences.  Explicit keep sets must
        reference registered ids and are registered verbatim, even when left
        without incidences.
        """
        if keep_edges is None:
            kept_edges = set(self._edge_props)
        else:
            kept_edges = {normalize_id(e) for e in keep_edges}
            for e in kept_edges:
                if e not in self._edge_props:
                    raise UnknownEdgeError(f"edge {e!r} is not registered")
        if keep_nodes is not None:
            kept_nodes = {normalize_id(n) for n in keep_nodes}
            for n in kept_nodes:
                if n not in self._node_props:
                    raise UnknownNodeError(f"node {n!r} is not registered")

        survivors = [
            inc
            for inc in self.incidences
            if inc.edge in kept_edges and (keep_nodes is None or inc.node in kept_nodes)
        ]
        if keep_nodes is None:
            kept_nodes = {inc.node for inc in survivors}
        return Hypergraph(
            survivors,
            node_props={n: self._node_props[n] for n in kept_nodes},
            edge_props={e: self._edge_props[e] for e in kept_edges},
            name=self._name,
        )

    def bipartite(self) -> BipartiteGraph:
        """Two-part graph: node vertices, edge vertices, one link per incidence."""
        links = tuple((inc.edge, inc.node) for inc in self.incidences)
        return BipartiteGraph(self.nodes, self.edges, links)

    def stats(self) -> dict[str, Any]:
        """Summary counts and size/degree histograms, JSON-ready."""
        edge_sizes: dict[int, int] = {}
        for m in self._members.values():
            edge_sizes[len(m)] = edge_sizes.get(len(m), 0) + 1
        node_degrees: dict[int, int] = {}
        for n in self._node_props:
            d = sum(1 for m in self._members.values() if n in m)
            node_degrees[d] = node_degrees.get(d, 0) + 1
        return {
            "nodes": self.num_nodes,
            "edges": self.num_edges,
            "incidences": self.num_incidences,
            "edge_sizes": {k: edge_sizes[k] for k in sorted(edge_sizes)},
            "node_degrees": {k: node_degrees[k] for k in sorted(node_degrees)},
            "isolated_nodes": len(self.isolated_nodes()),
            "empty_edges": len(self.empty_edges()),
        }


# -- CSV incidence format ----------------------------------------------------

CSV_HEADERS = (["edge", "node"], ["edge", "node", "weight"])


def parse_csv(data: bytes | str, name: str = "") -> Hypergraph:
    """Read the ``edge,node[,weight]`` incidence CSV (UTF-8, header required).

    A blank or absent weight column defaults to 1.0.  Attributes and
    isolated/empty entities are not representable in this format.
    """
    text = data.decode("utf-8-sig") if isinstance(data, bytes) else data
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] not in CSV_HEADERS:
        raise CsvFormatError("expected header row 'edge,node' or 'edge,node,weight'")
    has_weight = len(rows[0]) == 3
    incidences = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != len(rows[0]):
            raise CsvFormatError(f"line {lineno}: expected {len(rows[0])} columns, got {len(row)}")
        weight = DEFAULT_WEIGHT
        if has_weight and row[2].strip():
            try:
                weight = float(row[2])
            except ValueError:
                raise CsvFormatError(f"line {lineno}: weight {row[2]!r} is not a number") from None
            weight = check_weight(weight, f"line {lineno} weight")
        incidences.append((row[0], row[1], weight))
    return Hypergraph(incidences, name=name)


def emit_csv(h: Hypergraph) -> str:
    """Canonical CSV: rows sorted by (edge, node); the weight column appears
    only when some incidence weight differs from 1.0.  Lossy for attrs and
    isolated/empty entities."""
    incidences = h.incidences
    has_weight = any(inc.weight != DEFAULT_WEIGHT for inc in incidences)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADERS[1] if has_weight else CSV_HEADERS[0])
    for inc in incidences:
        row = [inc.edge, inc.node] + ([repr(inc.weight)] if has_weight else [])
        writer.writerow(row)
    return out.getvalue()
