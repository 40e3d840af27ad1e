"""Text persistence for tiling documents and bit grids.

Both formats are line-oriented ASCII with no trailing whitespace, so
files diff cleanly and round-trip byte-exactly.  Tiling files list tiles
in canonical order (kind, rotation, anchor), which makes serialization a
canonical form: any two documents with the same tile multiset produce
identical bytes.
"""

from __future__ import annotations

from .codec import BitGrid
from .lattice import LatticeVertex
from .tiles import Tile, TileKind, TilingDocument

TILING_HEADER = "PENROSE-TILING v1"
BITS_HEADER = "PENROSE-BITS v1"


class ParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def serialize_tiling(doc: TilingDocument) -> str:
    lines = [TILING_HEADER]
    for t in doc.canonical().tiles:
        a = t.anchor
        lines.append(f"tile {t.kind.value} {t.rotation} {a.x1} {a.x2} {a.x3} {a.x4}")
    return "\n".join(lines) + "\n"


def parse_tiling(text: str) -> TilingDocument:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError(1, "empty input")
    if lines[0] != TILING_HEADER:
        raise ParseError(1, f"expected header {TILING_HEADER!r}, got {lines[0]!r}")
    tiles = []
    for no, line in enumerate(lines[1:], start=2):
        parts = line.split(" ")
        if len(parts) != 7 or parts[0] != "tile":
            raise ParseError(no, f"malformed tile line {line!r}")
        kind_code, rot_s, *coords = parts[1:]
        try:
            kind = TileKind(kind_code)
        except ValueError:
            raise ParseError(no, f"unknown tile kind {kind_code!r}") from None
        try:
            rot = int(rot_s)
            x1, x2, x3, x4 = (int(c) for c in coords)
        except ValueError:
            raise ParseError(no, f"non-integer field in {line!r}") from None
        if not 0 <= rot <= 4:
            raise ParseError(no, f"rotation out of range: {rot}")
        tiles.append(Tile(kind, rot, LatticeVertex(x1, x2, x3, x4)))
    return TilingDocument(tuple(tiles))


def serialize_bits(grid: BitGrid) -> str:
    header = f"{BITS_HEADER} {grid.origin_x} {grid.origin_y} {grid.width} {grid.height}"
    return "\n".join([header, *grid.rows]) + "\n"


def parse_bits(text: str) -> BitGrid:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError(1, "empty input")
    head = lines[0].split(" ")
    if len(head) != 6 or " ".join(head[:2]) != BITS_HEADER:
        raise ParseError(1, f"expected header {BITS_HEADER!r} with geometry, got {lines[0]!r}")
    try:
        ox, oy, w, h = (int(f) for f in head[2:])
    except ValueError:
        raise ParseError(1, "non-integer grid geometry") from None
    if w < 1 or h < 1:
        raise ParseError(1, f"grid dimensions must be positive, got {w}x{h}")
    if len(lines) - 1 != h:
        raise ParseError(len(lines), f"expected {h} rows, found {len(lines) - 1}")
    for no, row in enumerate(lines[1:], start=2):
        if len(row) != w:
            raise ParseError(no, f"row has {len(row)} columns, expected {w}")
        if set(row) - {"0", "1"}:
            raise ParseError(no, f"invalid characters in row {row!r}")
    return BitGrid(ox, oy, w, h, tuple(lines[1:]))
