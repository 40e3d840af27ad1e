"""Greedy tiling growth on the flat lattice metric.

Starting from a seed tile at the origin, repeatedly attach a legal tile
along the open boundary, always choosing the placement that stays
closest to the origin in the flat integer coordinates.  The score of a
candidate is the largest X^2 + Y^2 over its four flat corners, which
penalizes protruding placements and keeps the patch round; ties break
lexicographically by (kind, rotation, flat anchor), so growth is fully
deterministic.
"""

from __future__ import annotations

from collections import Counter

from .contact import ALLOWED_CONTACTS, classify_contact, tile_bbox
from .lattice import DISPLACEMENTS, ORIGIN, LatticeVertex
from .projections import project_flat
from .tiles import (
    Edge,
    Tile,
    TileKind,
    TilingDocument,
    edge_indices,
    tile_edges,
    tile_vertices,
)


class NoCandidatesError(ValueError):
    """The frontier admits no legal placement."""


class StuckError(ValueError):
    """Growth halted before reaching the requested size."""

    def __init__(self, message: str, partial: TilingDocument):
        super().__init__(message)
        self.partial = partial


DEFAULT_SEED = Tile(TileKind.WIDE, 0, ORIGIN)


def _edge_use_counts(tiles) -> Counter:
    counts: Counter = Counter()
    for t in tiles:
        counts.update(tile_edges(t))
    return counts


def frontier_edges(doc: TilingDocument) -> list[Edge]:
    """Boundary edges: those belonging to exactly one placed tile."""
    counts = _edge_use_counts(doc.tiles)
    return [e for e, n in counts.items() if n == 1]


def _tiles_on_edge(edge: Edge):
    """All placements (both kinds, all rotations, either side) having the
    given unit edge on their boundary."""
    diff = edge.v - edge.u
    out = set()
    for kind in TileKind:
        for r in range(5):
            probe = Tile(kind, r, ORIGIN)
            vs = tile_vertices(probe)
            for i in range(4):
                a, b = vs[i], vs[(i + 1) % 4]
                step = b - a
                if step == diff:
                    out.add(Tile(kind, r, edge.u - a))
                elif step == -diff:
                    out.add(Tile(kind, r, edge.v - a))
    return out


def _legal_against(placed, boxes, candidate) -> bool:
    cx0, cx1, cy0, cy1 = tile_bbox(candidate)
    for t, (x0, x1, y0, y1) in zip(placed, boxes):
        if cx1 < x0 or x1 < cx0 or cy1 < y0 or y1 < cy0:
            continue
        if t == candidate:
            return False
        if classify_contact(t, candidate) not in ALLOWED_CONTACTS:
            return False
    return True


def candidate_placements(doc: TilingDocument, frontier: list[Edge] | None = None) -> list[Tile]:
    """Every tile that shares a full frontier edge and keeps the document
    legal, in canonical order.  Raises NoCandidatesError when empty."""
    if not doc.tiles:
        raise ValueError("candidate enumeration needs a nonempty document")
    if frontier is None:
        frontier = frontier_edges(doc)
    placed = set(doc.tiles)
    boxes = [tile_bbox(t) for t in doc.tiles]
    seen: set[Tile] = set()
    for edge in frontier:
        for cand in _tiles_on_edge(edge):
            if cand in seen or cand in placed:
                continue
            seen.add(cand)
    legal = [c for c in sorted(seen, key=Tile.sort_key) if _legal_against(doc.tiles, boxes, c)]
    if not legal:
        raise NoCandidatesError("no legal tile fits the current frontier")
    return legal


def placement_score(t: Tile) -> int:
    """Max squared flat-lattice distance from the origin over the corners."""
    return max(x * x + y * y for x, y in (project_flat(v) for v in tile_vertices(t)))


def _choice_key(t: Tile) -> tuple:
    ax, ay = project_flat(t.anchor)
    return (placement_score(t), t.kind.value, t.rotation, ax, ay)


def generate_greedy(n: int, seed: Tile = DEFAULT_SEED) -> TilingDocument:
    """Grow a valid n-tile document deterministically from the seed.

    Each step places the candidate minimizing placement_score; raises
    StuckError (carrying the partial document) if the frontier ever
    admits no legal tile, which unrestricted rhombus tilings are not
    expected to reach.
    """
    if n < 1:
        raise ValueError("tile count must be at least 1")
    if seed.anchor != ORIGIN:
        raise ValueError("seed tile must be anchored at the origin")
    tiles = [seed]
    counts = _edge_use_counts(tiles)
    while len(tiles) < n:
        doc = TilingDocument(tuple(tiles))
        frontier = [e for e, c in counts.items() if c == 1]
        try:
            candidates = candidate_placements(doc, frontier)
        except NoCandidatesError as exc:
            raise StuckError(
                f"stuck at {len(tiles)} of {n} tiles", TilingDocument(tuple(tiles))
            ) from exc
        best = min(candidates, key=_choice_key)
        tiles.append(best)
        counts.update(tile_edges(best))
    return TilingDocument(tuple(tiles))
