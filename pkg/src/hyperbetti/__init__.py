"""hyperbetti: hypergraph analytics with metadata, s-metrics, GF(2) homology,
HIF interchange, and deterministic Euler-diagram rendering."""

from .core import (
    BipartiteGraph,
    Hypergraph,
    Incidence,
    Properties,
    emit_csv,
    parse_csv,
)
from .errors import HyperbettiError
from .hif import Diagnostic, emit_hif, parse_hif, validate_hif
from .homology import BettiProfile, GF2Matrix, SimplicialComplex, betti_numbers, boundary_matrix, downward_closure, gf2_rank
from .layout import (
    Encodings,
    LayoutDocument,
    LayoutParams,
    RenderStyle,
    compute_hulls,
    force_layout,
    render_svg,
)
from .smetrics import (
    SLineGraph,
    s_betweenness,
    s_closeness,
    s_connected_components,
    s_diameter,
    s_distance,
    s_eccentricity,
    s_harmonic,
    s_line_graph,
)

__version__ = "0.1.0"

__all__ = [
    "BettiProfile",
    "BipartiteGraph",
    "Diagnostic",
    "Encodings",
    "GF2Matrix",
    "Hypergraph",
    "HyperbettiError",
    "Incidence",
    "LayoutDocument",
    "LayoutParams",
    "Properties",
    "RenderStyle",
    "SLineGraph",
    "SimplicialComplex",
    "betti_numbers",
    "boundary_matrix",
    "compute_hulls",
    "downward_closure",
    "emit_csv",
    "emit_hif",
    "force_layout",
    "gf2_rank",
    "parse_csv",
    "parse_hif",
    "render_svg",
    "s_betweenness",
    "s_closeness",
    "s_connected_components",
    "s_diameter",
    "s_distance",
    "s_eccentricity",
    "s_harmonic",
    "s_line_graph",
    "validate_hif",
    "__version__",
]
