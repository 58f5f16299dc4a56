"""Euler-diagram layout: seeded spring embedding, hull geometry, SVG export.

The layout runs a Fruchterman-Reingold style spring embedder over the
bipartite representation: hyperedges participate as phantom vertices that
pull their member nodes together but are never drawn.  All randomness comes
from one 64-bit linear congruential generator seeded by the caller, and every
arithmetic step happens in a fixed order, so identical inputs give
bit-identical layouts.

Hyperedges are drawn as the convex hull of their member node positions,
offset outward by a padding distance with rounded corners; single-member
edges become a circle approximation and collinear members a capsule.  The
SVG renderer emits one closed path per hull and one circle per node, with
optional attribute-driven size/color encodings.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping
from xml.sax.saxutils import escape

from .core import Hypergraph
from .errors import InconsistentDocumentError, MissingPositionError

Point = tuple[float, float]

# 12-hue categorical palette, cycled when more values appear.
PALETTE = (
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295",
)

_MAX_ARC_STEP = math.pi / 16  # radians between consecutive arc vertices
_MIN_ARC_POINTS = 8


class Lcg:
    """64-bit linear congruential generator; the layout's only randomness."""

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self._state = seed & self.MASK

    def next_u64(self) -> int:
        self._state = (self._state * self.MULTIPLIER + self.INCREMENT) & self.MASK
        return self._state

    def next_double(self) -> float:
        # top 53 bits give a uniform double in [0, 1)
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


@dataclass(frozen=True)
class Cooling:
    initial_step: float = 100.0
    decay: float = 0.95


@dataclass(frozen=True)
class Encodings:
    """Attribute keys driving visual variables; None leaves the default style."""

    node_size: str | None = None
    node_color: str | None = None
    edge_color: str | None = None

    def to_json_obj(self) -> dict:
        out = {}
        for key in ("node_size", "node_color", "edge_color"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        return out


@dataclass(frozen=True)
class LayoutParams:
    iterations: int = 300
    seed: int = 0
    canvas: tuple[float, float] = (1000.0, 1000.0)
    node_radius: float = 8.0
    hull_padding: float = 18.0
    cooling: Cooling = field(default_factory=Cooling)

    def __post_init__(self):
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if self.node_radius <= 0:
            raise ValueError("node_radius must be positive")
        if self.hull_padding < self.node_radius:
            raise ValueError("hull_padding must be >= node_radius")

    def to_json_obj(self) -> dict:
        return {
            "iterations": self.iterations,
            "canvas": [_round6(self.canvas[0]), _round6(self.canvas[1])],
            "node_radius": _round6(self.node_radius),
            "hull_padding": _round6(self.hull_padding),
            "cooling": {
                "initial_step": _round6(self.cooling.initial_step),
                "decay": _round6(self.cooling.decay),
            },
        }


@dataclass(frozen=True)
class LayoutDocument:
    """Positions for every node and edge phantom, plus hull polygons.

    ``node_positions`` and ``edge_positions`` together form the vertex
    position map; hulls are closed counterclockwise polygons.  ``pinned``
    is always empty in freshly computed layouts (pins live client-side).
    """

    node_positions: Mapping[str, Point]
    edge_positions: Mapping[str, Point]
    pinned: frozenset[str]
    hulls: Mapping[str, tuple[Point, ...]]
    encodings: Encodings
    seed: int
    params: LayoutParams

    def to_json_obj(self) -> dict:
        positions: dict[str, list[float]] = {
            n: [_round6(x), _round6(y)] for n, (x, y) in self.node_positions.items()
        }
        for e, (x, y) in self.edge_positions.items():
            # a shared node/edge id keeps the node entry; hulls carry the edge
            positions.setdefault(e, [_round6(x), _round6(y)])
        return {
            "positions": {k: positions[k] for k in sorted(positions)},
            "pinned": sorted(self.pinned),
            "hulls": {
                e: [[_round6(x), _round6(y)] for x, y in self.hulls[e]]
                for e in sorted(self.hulls)
            },
            "encodings": self.encodings.to_json_obj(),
            "seed": self.seed,
            "params": self.params.to_json_obj(),
        }

    def to_json_bytes(self) -> bytes:
        return (json.dumps(self.to_json_obj(), separators=(",", ":"), ensure_ascii=False) + "\n").encode("utf-8")


def _round6(value: float) -> float:
    rounded = round(float(value), 6)
    return 0.0 if rounded == 0 else rounded


# -- spring embedder ---------------------------------------------------------

def force_layout(h: Hypergraph, params: LayoutParams | None = None, encodings: Encodings | None = None) -> LayoutDocument:
    """Seeded spring-embedder layout of the bipartite representation.

    Attraction acts along incidence links, repulsion between all vertex
    pairs; displacement per iteration is capped by a geometrically cooling
    step.  The result is rescaled into the canvas inset by the hull padding.
    """
    params = params or LayoutParams()
    encodings = encodings or Encodings()
    nodes = h.nodes
    edges = h.edges
    order = [("n", v) for v in nodes] + [("e", v) for v in edges]
    if not order:
        return LayoutDocument({}, {}, frozenset(), {}, encodings, params.seed, params)

    width, height = params.canvas
    rng = Lcg(params.seed)
    pos = {key: [rng.next_double() * width, rng.next_double() * height] for key in order}
    links = [(("e", inc.edge), ("n", inc.node)) for inc in h.incidences]

    ideal = math.sqrt(width * height / len(order))
    step = params.cooling.initial_step
    for _ in range(params.iterations):
        disp = {key: [0.0, 0.0] for key in order}
        for i, a in enumerate(order):
            ax, ay = pos[a]
            for b in order[i + 1 :]:
                dx, dy = ax - pos[b][0], ay - pos[b][1]
                dist = math.hypot(dx, dy)
                if dist < 1e-12:
                    dx, dy, dist = 1.0, 0.0, 1.0  # coincident pair: split along x
                force = ideal * ideal / dist
                fx, fy = force * dx / dist, force * dy / dist
                disp[a][0] += fx
                disp[a][1] += fy
                disp[b][0] -= fx
                disp[b][1] -= fy
        for a, b in links:
            dx, dy = pos[a][0] - pos[b][0], pos[a][1] - pos[b][1]
            dist = math.hypot(dx, dy)
            if dist < 1e-12:
                continue
            force = dist * dist / ideal
            fx, fy = force * dx / dist, force * dy / dist
            disp[a][0] -= fx
            disp[a][1] -= fy
            disp[b][0] += fx
            disp[b][1] += fy
        for key in order:
            dx, dy = disp[key]
            length = math.hypot(dx, dy)
            if length > step:
                dx, dy = dx / length * step, dy / length * step
            pos[key][0] += dx
            pos[key][1] += dy
        step *= params.cooling.decay

    _rescale(pos, order, params)
    node_positions = {v: (pos[("n", v)][0], pos[("n", v)][1]) for v in nodes}
    edge_positions = {v: (pos[("e", v)][0], pos[("e", v)][1]) for v in edges}
    hulls = compute_hulls(h, node_positions, params.node_radius, params.hull_padding)
    return LayoutDocument(node_positions, edge_positions, frozenset(), hulls, encodings, params.seed, params)


def _rescale(pos: dict, order: list, params: LayoutParams):
    """Affine map of all positions into the canvas inset by hull_padding."""
    pad = params.hull_padding
    for axis, extent in ((0, params.canvas[0]), (1, params.canvas[1])):
        values = [pos[key][axis] for key in order]
        lo, hi = min(values), max(values)
        span = hi - lo
        if span < 1e-9:
            for key in order:
                pos[key][axis] = extent / 2.0
        else:
            scale = (extent - 2 * pad) / span
            for key in order:
                pos[key][axis] = pad + (pos[key][axis] - lo) * scale


# -- hull geometry -----------------------------------------------------------

def convex_hull(points: Iterable[Point]) -> list[Point]:
    """Convex hull by monotone chain, counterclockwise, extreme points only."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def build(seq):
        chain: list[Point] = []
        for p in seq:
            while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = build(pts)
    upper = build(reversed(pts))
    return lower[:-1] + upper[:-1]


def _cross(o: Point, a: Point, b: Point) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _arc(center: Point, radius: float, start: float, sweep: float) -> list[Point]:
    """Counterclockwise arc sample with at least 8 vertices, step <= pi/16."""
    if sweep < 1e-12:
        return [(center[0] + radius * math.cos(start), center[1] + radius * math.sin(start))]
    segments = max(_MIN_ARC_POINTS - 1, math.ceil(sweep / _MAX_ARC_STEP))
    return [
        (
            center[0] + radius * math.cos(start + sweep * t / segments),
            center[1] + radius * math.sin(start + sweep * t / segments),
        )
        for t in range(segments + 1)
    ]


def offset_polygon(hull: list[Point], radius: float) -> tuple[Point, ...]:
    """Round-cornered outward offset of a convex CCW polygon (or segment/point).

    A single point yields a regular polygon approximating the radius circle;
    a segment yields a capsule.  Corner arcs sweep between the outward
    normals of the adjacent edges, so the result stays convex and CCW.
    """
    if not hull:
        return ()
    if len(hull) == 1:
        cx, cy = hull[0]
        n = 32
        return tuple(
            (cx + radius * math.cos(2 * math.pi * t / n), cy + radius * math.sin(2 * math.pi * t / n))
            for t in range(n)
        )
    out: list[Point] = []
    m = len(hull)
    for i, vertex in enumerate(hull):
        before, after = hull[(i - 1) % m], hull[(i + 1) % m]
        a_in = _normal_angle(before, vertex)
        a_out = _normal_angle(vertex, after)
        sweep = (a_out - a_in) % (2 * math.pi)
        for p in _arc(vertex, radius, a_in, sweep):
            if not out or (abs(p[0] - out[-1][0]) > 1e-12 or abs(p[1] - out[-1][1]) > 1e-12):
                out.append(p)
    if len(out) > 1 and abs(out[0][0] - out[-1][0]) <= 1e-12 and abs(out[0][1] - out[-1][1]) <= 1e-12:
        out.pop()
    return tuple(out)


def _normal_angle(a: Point, b: Point) -> float:
    # outward normal of a CCW polygon edge a->b
    dx, dy = b[0] - a[0], b[1] - a[1]
    return math.atan2(-dx, dy)


def compute_hulls(
    h: Hypergraph,
    positions: Mapping[str, Point],
    node_radius: float,
    hull_padding: float,
) -> dict[str, tuple[Point, ...]]:
    """Offset convex hull around every non-empty edge's member positions."""
    hulls: dict[str, tuple[Point, ...]] = {}
    for edge in h.edges:
        members = h.edge_members(edge)
        if not members:
            continue
        pts = []
        for node in members:
            if node not in positions:
                raise MissingPositionError(f"edge {edge!r}: member node {node!r} has no position")
            pts.append((float(positions[node][0]), float(positions[node][1])))
        hulls[edge] = offset_polygon(convex_hull(pts), hull_padding)
    return hulls


# -- geometric predicates (shared with the viewer contract) -------------------

def polygon_is_convex_ccw(polygon: Iterable[Point], tolerance: float = 1e-9) -> bool:
    pts = list(polygon)
    if len(pts) < 3:
        return False
    m = len(pts)
    return all(_cross(pts[i], pts[(i + 1) % m], pts[(i + 2) % m]) >= -tolerance for i in range(m))


def point_strictly_inside(polygon: Iterable[Point], point: Point) -> bool:
    """Strict interior test for a convex CCW polygon (zero-length edges skipped)."""
    pts = list(polygon)
    m = len(pts)
    for i in range(m):
        a, b = pts[i], pts[(i + 1) % m]
        if abs(a[0] - b[0]) <= 1e-12 and abs(a[1] - b[1]) <= 1e-12:
            continue
        if _cross(a, b, point) <= 0:
            return False
    return True


# -- SVG rendering -------------------------------------------------------------

@dataclass(frozen=True)
class RenderStyle:
    background: str = "#ffffff"
    fill_opacity: float = 0.35
    hull_stroke_width: float = 1.5
    node_fill: str = "#4d4d4d"
    node_stroke: str = "#ffffff"
    font_family: str = "Helvetica, Arial, sans-serif"
    font_size: float = 12.0
    label_nodes: bool = True
    label_edges: bool = True


def _fmt(value: float) -> str:
    rounded = _round6(value)
    text = f"{rounded:.6f}".rstrip("0").rstrip(".")
    return text if text else "0"


def categorical_key(value: Any) -> str:
    """Canonical sort key for palette assignment, stable across languages:
    booleans, then numbers in minimal decimal form, then text."""
    if isinstance(value, bool):
        return "b:true" if value else "b:false"
    if isinstance(value, (int, float)):
        text = repr(float(value))
        return "n:" + (text[:-2] if text.endswith(".0") else text)
    return "s:" + str(value)


def _categorical_scale(values: Iterable[Any]) -> dict[Any, str]:
    ordered = sorted({categorical_key(v) for v in values if v is not None})
    return {key: PALETTE[i % len(PALETTE)] for i, key in enumerate(ordered)}


def render_svg(h: Hypergraph, doc: LayoutDocument, style: RenderStyle | None = None) -> bytes:
    """Standalone SVG: one closed hull path per non-empty edge, one circle per
    node, text labels.  Encodings map numeric attrs to size (linear scale over
    the observed range) and categorical attrs to the 12-hue palette."""
    style = style or RenderStyle()
    for node in h.nodes:
        if node not in doc.node_positions:
            raise InconsistentDocumentError(f"node {node!r} has no position in this document")
    for edge in h.edges:
        if h.edge_members(edge) and edge not in doc.hulls:
            raise InconsistentDocumentError(f"edge {edge!r} has no hull in this document")

    width, height = doc.params.canvas
    enc = doc.encodings

    def lookup(scale: dict[str, str], value: Any, fallback: str) -> str:
        if value is None:
            return fallback
        return scale.get(categorical_key(value), fallback)

    edge_color: dict[str, str] = {e: PALETTE[i % len(PALETTE)] for i, e in enumerate(h.edges)}
    if enc.edge_color is not None:
        observed = {e: h.edge_properties(e).attrs.get(enc.edge_color) for e in h.edges}
        scale = _categorical_scale(observed.values())
        edge_color = {e: lookup(scale, observed[e], "#999999") for e in h.edges}

    node_fill = {n: style.node_fill for n in h.nodes}
    if enc.node_color is not None:
        observed = {n: h.node_properties(n).attrs.get(enc.node_color) for n in h.nodes}
        scale = _categorical_scale(observed.values())
        node_fill = {n: lookup(scale, observed[n], style.node_fill) for n in h.nodes}

    base_radius = doc.params.node_radius
    node_radius = {n: base_radius for n in h.nodes}
    if enc.node_size is not None:
        numeric = {
            n: float(v)
            for n in h.nodes
            for v in [h.node_properties(n).attrs.get(enc.node_size)]
            if isinstance(v, (int, float)) and not isinstance(v, bool)
        }
        if numeric:
            lo, hi = min(numeric.values()), max(numeric.values())
            for n, v in numeric.items():
                if hi > lo:
                    node_radius[n] = base_radius * (0.5 + 1.25 * (v - lo) / (hi - lo))

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}"'
        f' viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<rect width="{_fmt(width)}" height="{_fmt(height)}" fill="{style.background}"/>',
        '<g class="hulls">',
    ]
    for edge in h.edges:
        if edge not in doc.hulls:
            continue
        d = "M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in doc.hulls[edge]) + " Z"
        parts.append(
            f'<path data-edge="{_attr(edge)}" d="{d}" fill="{edge_color[edge]}"'
            f' fill-opacity="{_fmt(style.fill_opacity)}" stroke="{edge_color[edge]}"'
            f' stroke-width="{_fmt(style.hull_stroke_width)}"/>'
        )
    parts.append("</g>")
    parts.append('<g class="nodes">')
    for node in h.nodes:
        x, y = doc.node_positions[node]
        parts.append(
            f'<circle data-node="{_attr(node)}" cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(node_radius[node])}"'
            f' fill="{node_fill[node]}" stroke="{style.node_stroke}"/>'
        )
    parts.append("</g>")
    labels = []
    if style.label_edges:
        for edge in h.edges:
            if edge not in doc.hulls or not doc.hulls[edge]:
                continue
            cx = sum(p[0] for p in doc.hulls[edge]) / len(doc.hulls[edge])
            top = min(p[1] for p in doc.hulls[edge])
            labels.append((cx, top - 4.0, edge, "edge"))
    if style.label_nodes:
        for node in h.nodes:
            x, y = doc.node_positions[node]
            labels.append((x, y - node_radius[node] - 4.0, node, "node"))
    if labels:
        parts.append('<g class="labels">')
        for x, y, text, kind in labels:
            parts.append(
                f'<text class="{kind}-label" x="{_fmt(x)}" y="{_fmt(y)}" text-anchor="middle"'
                f' font-family="{_attr(style.font_family)}" font-size="{_fmt(style.font_size)}">{escape(text)}</text>'
            )
        parts.append("</g>")
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("utf-8")


def _attr(value: str) -> str:
    return escape(value, {'"': "&quot;"})
