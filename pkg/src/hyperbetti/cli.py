"""Command-line entry point.

Every analytic reads a hypergraph from a file or stdin (``-``), auto-detects
HIF vs CSV by extension (``--format`` overrides), writes machine output as
compact JSON on stdout, and exits 0 on success, 1 on usage errors, 2 on data
errors.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from . import hif, report, server, smetrics
from .core import Hypergraph, emit_csv, parse_csv
from .errors import HyperbettiError
from .homology import betti_numbers
from .layout import Encodings, LayoutParams, force_layout, render_svg

SIDE_CHOICE = click.Choice(["edges", "nodes"])


def _load(source: str, fmt: str | None) -> Hypergraph:
    if source == "-":
        data = sys.stdin.buffer.read()
        name = ""
    else:
        data = Path(source).read_bytes()
        name = Path(source).stem
    if fmt is None:
        fmt = "csv" if source.lower().endswith(".csv") else "hif"
    return parse_csv(data, name=name) if fmt == "csv" else hif.parse_hif(data)


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":"), ensure_ascii=False) + "\n")


def _emit_text(lines) -> None:
    for line in lines:
        sys.stdout.write(f"{line}\n")


def input_arguments(fn):
    fn = click.option(
        "--format", "fmt", type=click.Choice(["hif", "csv"]), default=None,
        help="Input format; default: by file extension, hif for stdin.",
    )(fn)
    fn = click.argument("source", metavar="[INPUT]", default="-")(fn)
    return fn


def output_option(fn):
    return click.option(
        "--output", type=click.Choice(["json", "text"]), default="json", help="Output rendering."
    )(fn)


@click.group()
def cli():
    """Hypergraph analytics: s-metrics, GF(2) homology, HIF, Euler diagrams."""


@cli.command()
@input_arguments
@output_option
def stats(source, fmt, output):
    """Entity counts and size/degree histograms."""
    summary = _load(source, fmt).stats()
    if output == "json":
        _emit_json(summary)
    else:
        lines = [f"{k}: {v}" for k, v in summary.items() if not isinstance(v, dict)]
        for key in ("edge_sizes", "node_degrees"):
            body = " ".join(f"{k}={v}" for k, v in summary[key].items())
            lines.append(f"{key}: {body}")
        _emit_text(lines)


@cli.command()
@input_arguments
@output_option
def toplexes(source, fmt, output):
    """Maximal hyperedges (not contained in any other)."""
    result = sorted(_load(source, fmt).toplexes())
    _emit_json(result) if output == "json" else _emit_text(result)


@cli.command()
@input_arguments
@output_option
@click.option("--s", "s", type=int, default=1, help="Width parameter (default 1).")
@click.option("--side", type=SIDE_CHOICE, default="edges", help="Line graph side.")
def components(source, fmt, output, s, side):
    """s-connected components of the line graph."""
    comps = smetrics.s_connected_components(_load(source, fmt), s, side)
    if output == "json":
        _emit_json(smetrics.components_json(comps))
    else:
        _emit_text(", ".join(c) for c in comps)


@cli.command()
@input_arguments
@output_option
@click.option("--s", "s", type=int, default=1)
@click.option("--side", type=SIDE_CHOICE, default="edges")
@click.option("--from", "src", required=True, help="Source vertex.")
@click.option("--to", "dst", required=True, help="Target vertex.")
def distance(source, fmt, output, s, side, src, dst):
    """Shortest s-walk length between two vertices."""
    value = smetrics.s_distance(_load(source, fmt), s, side, src, dst)
    if output == "json":
        _emit_json({"s": s, "side": side, "from": src, "to": dst, "distance": value})
    else:
        _emit_text(["unreachable" if value is None else str(value)])


@cli.command()
@input_arguments
@output_option
@click.option("--kind", type=click.Choice(["betweenness", "closeness", "harmonic", "eccentricity"]), required=True)
@click.option("--s", "s", type=int, default=1)
@click.option("--side", type=SIDE_CHOICE, default="edges")
@click.option("--normalized", is_flag=True, help="Apply the standard normalization (ignored for eccentricity).")
def centrality(source, fmt, output, kind, s, side, normalized):
    """s-centrality of every line-graph vertex."""
    h = _load(source, fmt)
    if kind == "eccentricity":
        values = smetrics.s_eccentricities(smetrics.s_line_graph(h, s, side))
        obj = {v: values[v] for v in sorted(values)}
    else:
        fn = {"betweenness": smetrics.s_betweenness, "closeness": smetrics.s_closeness, "harmonic": smetrics.s_harmonic}[kind]
        obj = smetrics.centrality_json(fn(h, s, side, normalized=normalized))
    if output == "json":
        _emit_json(obj)
    else:
        _emit_text(f"{k}\t{v}" for k, v in obj.items())


@cli.command()
@input_arguments
@output_option
@click.option("--kmax", type=click.IntRange(0, 10), default=2, help="Dimension cap (default 2).")
def homology(source, fmt, output, kmax):
    """Betti numbers of the hyperedge-generated complex over GF(2)."""
    profile = betti_numbers(_load(source, fmt), kmax)
    if output == "json":
        _emit_json(profile.to_json_obj())
    else:
        _emit_text([
            "betti: " + " ".join(map(str, profile.betti)),
            "face_counts: " + " ".join(map(str, profile.face_counts)),
            f"euler: {profile.euler_characteristic}",
            "coefficients: GF(2) (non-reduced)",
        ])


@cli.command()
@input_arguments
@click.option("--to", "target", type=click.Choice(["hif", "csv"]), required=True)
def convert(source, fmt, target):
    """Convert between the HIF and CSV incidence formats."""
    h = _load(source, fmt)
    if target == "hif":
        sys.stdout.buffer.write(hif.emit_hif(h))
    else:
        sys.stdout.write(emit_csv(h))


def _layout_params(seed, iterations):
    return LayoutParams(seed=seed, iterations=iterations)


@cli.command()
@input_arguments
@click.option("--seed", type=click.IntRange(0, (1 << 64) - 1), default=0)
@click.option("--iterations", type=click.IntRange(min=1), default=300)
@click.option("--svg", "as_svg", is_flag=True, help="Emit SVG instead of the layout JSON.")
@click.option("--node-size", default=None, help="Numeric attr key driving node radius.")
@click.option("--node-color", default=None, help="Categorical attr key driving node color.")
@click.option("--edge-color", default=None, help="Categorical attr key driving hull color.")
def layout(source, fmt, seed, iterations, as_svg, node_size, node_color, edge_color):
    """Deterministic Euler-diagram layout (JSON or SVG)."""
    h = _load(source, fmt)
    encodings = Encodings(node_size=node_size, node_color=node_color, edge_color=edge_color)
    doc = force_layout(h, _layout_params(seed, iterations), encodings)
    sys.stdout.buffer.write(render_svg(h, doc) if as_svg else doc.to_json_bytes())


@cli.command()
@input_arguments
@click.option("--port", type=int, default=lambda: int(os.environ.get("HYPERBETTI_PORT", "8080")),
              help="Port (default: HYPERBETTI_PORT or 8080).")
@click.option("--host", default="127.0.0.1")
@click.option("--seed", type=click.IntRange(0, (1 << 64) - 1), default=0, help="Default layout seed.")
@click.option("--assets", type=click.Path(file_okay=False), default=None, help="Viewer bundle directory.")
def serve(source, fmt, port, host, seed, assets):
    """Serve the viewer and the read-only data API."""
    h = _load(source, fmt)
    srv = server.make_server(h, port, host=host, default_seed=seed, assets_dir=assets)
    click.echo(f"serving {h.num_nodes} nodes / {h.num_edges} edges on http://{host}:{srv.server_port}", err=True)
    try:
        srv.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        srv.server_close()


@cli.command(name="report")
@input_arguments
@click.option("--out-dir", type=click.Path(file_okay=False), required=True)
@click.option("--seed", type=click.IntRange(0, (1 << 64) - 1), default=0)
def report_cmd(source, fmt, out_dir, seed):
    """Write delimited summaries and matplotlib figures to a directory."""
    written = report.write_report(_load(source, fmt), out_dir, seed=seed)
    _emit_json({"written": [str(p) for p in written]})


def main(argv=None) -> int:
    """Run the CLI; returns 0 (ok), 1 (usage error), or 2 (data error)."""
    try:
        cli.main(args=argv, prog_name="hyperbetti", standalone_mode=False)
        return 0
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.exceptions.Abort:
        return 1
    except click.UsageError as exc:
        click.echo(f"usage error: {exc.format_message()} (see 'hyperbetti --help')", err=True)
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except HyperbettiError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2


def entrypoint():
    sys.exit(main())
