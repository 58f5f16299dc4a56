"""Report rendering: matplotlib figures plus delimited summaries on disk.

``write_report`` drops a small bundle into an output directory: a CSV
summary of the hypergraph, CSV histograms of edge sizes and node degrees,
bar-chart figures of both histograms, and an Euler-diagram figure rendered
from the deterministic layout.  Figures go through the Agg backend so the
report works headless.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Polygon as MplPolygon

from .core import Hypergraph
from .layout import LayoutDocument, LayoutParams, force_layout

_FIG_DPI = 150


def _write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _histogram_figure(path: Path, counts: dict[int, int], xlabel: str, title: str) -> None:
    fig, ax = plt.subplots(figsize=(6, 4), dpi=_FIG_DPI)
    keys = sorted(counts)
    ax.bar([str(k) for k in keys], [counts[k] for k in keys], color="#4e79a7")
    ax.set_xlabel(xlabel)
    ax.set_ylabel("count")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def _euler_figure(path: Path, h: Hypergraph, doc: LayoutDocument) -> None:
    width, height = doc.params.canvas
    fig, ax = plt.subplots(figsize=(7, 7), dpi=_FIG_DPI)
    from .layout import PALETTE

    for i, edge in enumerate(h.edges):
        if edge not in doc.hulls:
            continue
        color = PALETTE[i % len(PALETTE)]
        ax.add_patch(MplPolygon(list(doc.hulls[edge]), closed=True, facecolor=color, alpha=0.35, edgecolor=color))
    for node, (x, y) in doc.node_positions.items():
        ax.plot(x, y, "o", color="#4d4d4d", markersize=6)
        ax.annotate(node, (x, y), textcoords="offset points", xytext=(0, 6), ha="center", fontsize=8)
    ax.set_xlim(0, width)
    ax.set_ylim(height, 0)  # match SVG orientation: y grows downward
    ax.set_aspect("equal")
    ax.set_axis_off()
    title = h.name or "hypergraph"
    ax.set_title(f"{title}: {h.num_nodes} nodes, {h.num_edges} edges")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def write_report(h: Hypergraph, out_dir: str | Path, seed: int = 0) -> list[Path]:
    """Write the report bundle; returns the created paths (sorted)."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    stats = h.stats()

    summary = out / "summary.csv"
    _write_csv(
        summary,
        ["metric", "value"],
        [
            ["nodes", stats["nodes"]],
            ["edges", stats["edges"]],
            ["incidences", stats["incidences"]],
            ["isolated_nodes", stats["isolated_nodes"]],
            ["empty_edges", stats["empty_edges"]],
        ],
    )
    edge_sizes = out / "edge_sizes.csv"
    _write_csv(edge_sizes, ["size", "count"], [[k, v] for k, v in stats["edge_sizes"].items()])
    node_degrees = out / "node_degrees.csv"
    _write_csv(node_degrees, ["degree", "count"], [[k, v] for k, v in stats["node_degrees"].items()])

    written = [summary, edge_sizes, node_degrees]
    if stats["edge_sizes"]:
        fig_path = out / "edge_sizes.png"
        _histogram_figure(fig_path, stats["edge_sizes"], "edge size", "Edge sizes")
        written.append(fig_path)
    if stats["node_degrees"]:
        fig_path = out / "node_degrees.png"
        _histogram_figure(fig_path, stats["node_degrees"], "node degree", "Node degrees")
        written.append(fig_path)
    if h.num_nodes:
        doc = force_layout(h, LayoutParams(seed=seed))
        fig_path = out / "euler_diagram.png"
        _euler_figure(fig_path, h, doc)
        written.append(fig_path)
    return sorted(written)
