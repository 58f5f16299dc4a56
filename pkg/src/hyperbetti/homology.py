"""Simplicial homology over GF(2) for hyperedge-generated complexes.

Each hyperedge is read as a simplex on its node set; the downward closure of
all hyperedges is an abstract simplicial complex, truncated at a dimension
cap because the closure is exponential in hyperedge size.  Betti numbers come
from boundary-operator ranks over the two-element field, where orientation
signs vanish and arithmetic is exact:

    beta_k = n_k - rank(d_k) - rank(d_{k+1})

The reported homology is non-reduced (beta_0 counts connected components).
To keep beta_kmax honest under the cap, the rank of d_{kmax+1} is computed
from the (kmax+1)-skeleton whenever some hyperedge reaches above the cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Hypergraph
from .errors import DimensionOutOfRangeError, EdgeTooLargeError

MAX_EDGE_NODES = 25  # closure of anything larger would exhaust memory
MAX_KMAX = 10


@dataclass(frozen=True)
class SimplicialComplex:
    """Dimension-indexed simplices over a dense vertex indexing.

    ``simplices[k]`` holds the k-simplices as sorted, strictly increasing
    (k+1)-tuples of vertex indices; the family is downward closed up to
    ``kmax``.  ``vertex_ids[i]`` recovers the node id for index ``i``.
    """

    kmax: int
    vertex_ids: tuple[str, ...]
    simplices: tuple[tuple[tuple[int, ...], ...], ...]

    def face_count(self, k: int) -> int:
        return len(self.simplices[k]) if 0 <= k <= self.kmax else 0

    @property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertex_ids)}


@dataclass(frozen=True)
class GF2Matrix:
    """Dense bit matrix over GF(2); each row is the int whose bit j is entry (i, j)."""

    rows: int
    cols: int
    row_bits: tuple[int, ...]

    def entry(self, i: int, j: int) -> int:
        return self.row_bits[i] >> j & 1


@dataclass(frozen=True)
class BettiProfile:
    """Betti numbers beta_0..beta_kmax with face counts and Euler characteristic."""

    betti: tuple[int, ...]
    face_counts: tuple[int, ...]
    euler_characteristic: int

    def to_json_obj(self) -> dict:
        return {
            "betti": list(self.betti),
            "face_counts": list(self.face_counts),
            "euler": self.euler_characteristic,
            "coefficients": "GF(2)",
            "reduced": False,
        }


def downward_closure(h: Hypergraph, kmax: int) -> SimplicialComplex:
    """All subsets (size 1..kmax+1) of every hyperedge's node set, deduplicated.

    Empty edges contribute nothing; isolated registered nodes appear as
    0-simplices.  Edges with more than 25 nodes are rejected.
    """
    if kmax < 0:
        raise DimensionOutOfRangeError(f"kmax must be >= 0, got {kmax}")
    vertex_ids = h.nodes
    index = {v: i for i, v in enumerate(vertex_ids)}
    levels: list[set[tuple[int, ...]]] = [set() for _ in range(kmax + 1)]
    levels[0].update((i,) for i in range(len(vertex_ids)))
    for edge in h.edges:
        members = sorted(index[n] for n in h.edge_members(edge))
        if len(members) > MAX_EDGE_NODES:
            raise EdgeTooLargeError(
                f"edge {edge!r} has {len(members)} nodes; closure caps at {MAX_EDGE_NODES}"
            )
        for k in range(1, min(len(members), kmax + 1)):
            levels[k].update(combinations(members, k + 1))
    return SimplicialComplex(kmax, vertex_ids, tuple(tuple(sorted(level)) for level in levels))


def boundary_matrix(c: SimplicialComplex, k: int) -> GF2Matrix:
    """Boundary operator d_k: entry (i, j) = 1 iff face i bounds k-simplex j."""
    if not 1 <= k <= c.kmax:
        raise DimensionOutOfRangeError(f"k must be in 1..{c.kmax}, got {k}")
    face_index = {simplex: i for i, simplex in enumerate(c.simplices[k - 1])}
    bits = [0] * len(c.simplices[k - 1])
    for j, simplex in enumerate(c.simplices[k]):
        for drop in range(len(simplex)):
            face = simplex[:drop] + simplex[drop + 1 :]
            bits[face_index[face]] |= 1 << j
    return GF2Matrix(len(c.simplices[k - 1]), len(c.simplices[k]), tuple(bits))


def gf2_rank(m: GF2Matrix) -> int:
    """Rank over GF(2) by row elimination on bit-packed rows; input untouched."""
    pivots: list[tuple[int, int]] = []  # (pivot bit, reduced row)
    rank = 0
    for row in m.row_bits:
        for bit, prow in pivots:
            if row >> bit & 1:
                row ^= prow
        if row:
            pivots.append((row.bit_length() - 1, row))
            rank += 1
    return rank


def betti_numbers(h: Hypergraph, kmax: int) -> BettiProfile:
    """Betti numbers of the hyperedge-generated complex, capped at ``kmax``.

    The closure is built one dimension above the cap so that rank(d_{kmax+1})
    is available and beta_kmax is not inflated when hyperedges exceed the cap.
    """
    if not 0 <= kmax <= MAX_KMAX:
        raise DimensionOutOfRangeError(f"kmax must be in 0..{MAX_KMAX}, got {kmax}")
    extended = downward_closure(h, kmax + 1)
    ranks = [0] * (kmax + 3)  # ranks[k] = rank of d_k; d_0 has rank 0
    for k in range(1, kmax + 2):
        if extended.face_count(k) and extended.face_count(k - 1):
            ranks[k] = gf2_rank(boundary_matrix(extended, k))
    face_counts = tuple(extended.face_count(k) for k in range(kmax + 1))
    betti = tuple(face_counts[k] - ranks[k] - ranks[k + 1] for k in range(kmax + 1))
    euler = sum((-1) ** k * n for k, n in enumerate(face_counts))
    return BettiProfile(betti, face_counts, euler)
