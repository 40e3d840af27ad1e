"""Placed rhombus tiles and documents holding them.

A tile is (kind, rotation, anchor).  The narrow rhombus at rotation 0
has its edges along the 36- and 72-degree directions, the wide rhombus
along the 0- and 72-degree directions; rotation r turns both by r*36
degrees.  A rhombus is centrally symmetric, so rotations live in 0..4
and a turned tile re-anchors at the opposite vertex when the index
wraps.  The anchor is the vertex from which the two defining edge
directions emanate (the lower-left vertex at rotation 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .lattice import DISPLACEMENTS, LatticeVertex


class TileKind(Enum):
    NARROW = "N"  # 36-degree rhombus
    WIDE = "W"  # 72-degree rhombus


# Direction offsets of the two edges emanating from the anchor, at
# rotation 0.
_EDGE_OFFSETS = {TileKind.NARROW: (1, 2), TileKind.WIDE: (0, 2)}


class DegenerateSharingError(ValueError):
    """Two tiles share more than one edge (duplicate or overlapping tiles)."""


@dataclass(frozen=True, slots=True)
class Tile:
    kind: TileKind
    rotation: int
    anchor: LatticeVertex

    def __post_init__(self) -> None:
        if not 0 <= self.rotation <= 4:
            raise ValueError(f"rotation must be in 0..4, got {self.rotation}")

    def sort_key(self) -> tuple:
        return (self.kind.value, self.rotation, self.anchor.as_tuple())


@dataclass(frozen=True, slots=True)
class Edge:
    """Unordered unit edge, endpoints stored in lattice order."""

    u: LatticeVertex
    v: LatticeVertex

    @classmethod
    def of(cls, a: LatticeVertex, b: LatticeVertex) -> Edge:
        return cls(a, b) if a < b else cls(b, a)


def edge_indices(t: Tile) -> tuple[int, int]:
    """Direction indices (mod 10) of the two anchor edges."""
    i, j = _EDGE_OFFSETS[t.kind]
    return ((i + t.rotation) % 10, (j + t.rotation) % 10)


def tile_vertices(t: Tile) -> tuple[LatticeVertex, LatticeVertex, LatticeVertex, LatticeVertex]:
    """The four corners, counterclockwise from the anchor."""
    i, j = edge_indices(t)
    a = t.anchor
    ei = DISPLACEMENTS[i]
    ej = DISPLACEMENTS[j]
    return (a, a + ei, a + ei + ej, a + ej)


def tile_edges(t: Tile) -> tuple[Edge, Edge, Edge, Edge]:
    vs = tile_vertices(t)
    return (
        Edge.of(vs[0], vs[1]),
        Edge.of(vs[1], vs[2]),
        Edge.of(vs[2], vs[3]),
        Edge.of(vs[3], vs[0]),
    )


def shared_edge(t1: Tile, t2: Tile) -> Edge | None:
    """The unique common edge of two tiles, or None.

    Raises DegenerateSharingError when the edge sets intersect in two or
    more edges, which only happens for duplicate or overlapping tiles.
    """
    common = set(tile_edges(t1)) & set(tile_edges(t2))
    if len(common) > 1:
        raise DegenerateSharingError(
            f"tiles share {len(common)} edges: {t1} vs {t2}"
        )
    return common.pop() if common else None


def translate_tile(t: Tile, d: LatticeVertex) -> Tile:
    return Tile(t.kind, t.rotation, t.anchor + d)


def canonical_tile(kind: TileKind, rotation: int, anchor: LatticeVertex) -> Tile:
    """Fold an arbitrary rotation index into the canonical 0..4 range.

    Rotations r and r+5 describe the same rhombus anchored at opposite
    vertices, so the anchor moves to the far corner when folding.
    """
    r = rotation % 10
    if r >= 5:
        i, j = _EDGE_OFFSETS[kind]
        anchor = anchor + DISPLACEMENTS[(i + r) % 10] + DISPLACEMENTS[(j + r) % 10]
        r -= 5
    return Tile(kind, r, anchor)


def rotate_tile(t: Tile) -> Tile:
    """The tile whose plane image is t's rotated by 36 degrees about the origin."""
    from .lattice import rotate36

    return canonical_tile(t.kind, t.rotation + 1, rotate36(t.anchor))


@dataclass(frozen=True)
class TilingDocument:
    """An ordered list of placed tiles; the unit of persistence."""

    tiles: tuple[Tile, ...]

    @classmethod
    def of(cls, tiles) -> TilingDocument:
        return cls(tuple(tiles))

    def __len__(self) -> int:
        return len(self.tiles)

    def __iter__(self):
        return iter(self.tiles)

    def canonical(self) -> TilingDocument:
        """Tiles sorted by (kind, rotation, anchor); the serialized order."""
        return TilingDocument(tuple(sorted(self.tiles, key=Tile.sort_key)))

    def vertices(self) -> set[LatticeVertex]:
        out: set[LatticeVertex] = set()
        for t in self.tiles:
            out.update(tile_vertices(t))
        return out


EMPTY_DOCUMENT = TilingDocument(())
