"""Exact tile-contact classification and whole-document validation.

Two independent rulings on how a pair of placed rhombi touch:

* ``classify_contact_canonical`` is the fixed-orientation hexagon
  algorithm for a narrow tile at the origin against a wide tile at a
  given displacement, decided by six signs of a + b*sqrt(5);
* ``classify_contact`` handles arbitrary tile pairs from first
  principles: a separating-axis scan over the eight edge half-planes in
  exact arithmetic, followed, in the touching case, by an exact
  analysis of the (at most one-dimensional) contact set.

Both are pure integer computations; they must and do agree where their
domains overlap.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .lattice import LatticeVertex, cross_sign, plane_compare, plane_position, satisfies_constraints
from .quadratic import sign_quad
from .tiles import Tile, TilingDocument, tile_edges, tile_vertices


class ContactClass(Enum):
    """Five-way contact taxonomy; values are the classifier's verdict strings."""

    NO_CONTACT = "no contact"
    VERTEX_VERTEX = "vertex-vertex contact"
    VERTEX_OR_PARTIAL_EDGE = "vertex-edge or partial edge contact"
    PERFECT_EDGE = "perfect edge contact"
    AREA_OVERLAP = "nonzero-area overlap"


class IdenticalTilesError(ValueError):
    """Contact query on two identical tiles (counts as area overlap)."""


# Hexagon slab offsets b[i][j] for i in 1..3, j in (-1, +1): the contact
# hexagon for the canonical orientation pair has three pairs of parallel
# edges, and p_i between b[i][-1] and b[i][+1] puts the displacement
# inside slab i.
_HEX_B = {
    (1, -1): (-1, -1),
    (1, 1): (3, 1),
    (2, -1): (-4, 0),
    (2, 1): (8, 0),
    (3, -1): (-8, 0),
    (3, 1): (4, 4),
}

_PERFECT_DISPLACEMENTS = (
    LatticeVertex(1, 1, 1, 0),
    LatticeVertex(-4, 0, 0, 0),
)


def classify_contact_canonical(d: LatticeVertex) -> ContactClass:
    """Contact of the canonical pair: narrow tile (rotation 0) anchored at
    the origin, wide tile (rotation 0) anchored at displacement d.

    The set of displacements with contact is a hexagon; two of its
    vertices mean perfect edge contact and are special-cased before the
    six edge-sign tests.
    """
    if d in _PERFECT_DISPLACEMENTS:
        return ContactClass.PERFECT_EDGE
    x1, x2, x3, x4 = d.x1, d.x2, d.x3, d.x4
    p = {
        1: (2 * x3 + x4, x4),
        2: (-x1 + x3 + 3 * x4, -x2 + x3 + x4),
        3: (-x1 - 5 * x2 - 2 * x3 + 4 * x4, -x1 - x2 + 2 * x3),
    }
    signs = sorted(
        -j * sign_quad(p[i][0] - _HEX_B[i, j][0], p[i][1] - _HEX_B[i, j][1])
        for i in (1, 2, 3)
        for j in (-1, 1)
    )
    if signs[0] == -1:
        return ContactClass.NO_CONTACT
    if signs[1] == 0:
        return ContactClass.VERTEX_VERTEX
    if signs[0] == 0:
        return ContactClass.VERTEX_OR_PARTIAL_EDGE
    return ContactClass.AREA_OVERLAP


def _in_closed(pt: LatticeVertex, poly: tuple[LatticeVertex, ...]) -> bool:
    # poly is counterclockwise; closed membership is "never strictly right".
    for i in range(4):
        if cross_sign(poly[i], poly[(i + 1) % 4], pt) < 0:
            return False
    return True


def classify_contact(t1: Tile, t2: Tile) -> ContactClass:
    """Exact contact class of two placed tiles.

    Separating-axis scan: for each directed edge of either tile, the
    signs of the other tile's four corners against the edge line decide
    strict separation (all -1), touching separation (all <= 0), or
    nothing.  A strict separator anywhere means no contact; no separator
    at all means the interiors meet.  Otherwise the closures touch in a
    point or a segment whose endpoints are corners of one of the tiles,
    and the class falls out of which corners those are.
    """
    if t1 == t2:
        raise IdenticalTilesError(f"identical tiles: {t1}")
    P = tile_vertices(t1)
    Q = tile_vertices(t2)
    touch_separator = False
    for poly, other in ((P, Q), (Q, P)):
        for i in range(4):
            a, b = poly[i], poly[(i + 1) % 4]
            m = max(cross_sign(a, b, q) for q in other)
            if m == -1:
                return ContactClass.NO_CONTACT
            if m == 0:
                touch_separator = True
    if not touch_separator:
        return ContactClass.AREA_OVERLAP

    contact = [p for p in P if _in_closed(p, Q)]
    contact += [q for q in Q if _in_closed(q, P) and q not in contact]
    if not contact:  # pragma: no cover - impossible for touching convex tiles
        raise AssertionError("touching tiles with empty contact set")
    if len(contact) == 1:
        c = contact[0]
        if c in P and c in Q:
            return ContactClass.VERTEX_VERTEX
        return ContactClass.VERTEX_OR_PARTIAL_EDGE
    lo = hi = contact[0]
    for c in contact[1:]:
        if plane_compare(c, lo) < 0:
            lo = c
        if plane_compare(c, hi) > 0:
            hi = c
    seg = frozenset((lo, hi))
    p_edges = {frozenset((P[i], P[(i + 1) % 4])) for i in range(4)}
    q_edges = {frozenset((Q[i], Q[(i + 1) % 4])) for i in range(4)}
    if seg in p_edges and seg in q_edges:
        return ContactClass.PERFECT_EDGE
    return ContactClass.VERTEX_OR_PARTIAL_EDGE


ALLOWED_CONTACTS = frozenset(
    (ContactClass.NO_CONTACT, ContactClass.VERTEX_VERTEX, ContactClass.PERFECT_EDGE)
)

# Padding for the float bounding-box prefilter.  Plane coordinates of
# desk-scale vertices carry absolute float error far below 1e-9, so
# boxes padded by this margin can only be disjoint when the true tiles
# are disjoint.
_BBOX_MARGIN = 1e-6


@dataclass(frozen=True)
class Defect:
    kind: str  # "constraint" | "duplicate" | "contact"
    tiles: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    defects: tuple[Defect, ...]

    @property
    def valid(self) -> bool:
        return not self.defects

    def lines(self) -> list[str]:
        out = [
            f"{d.kind} tiles={','.join(map(str, d.tiles))}: {d.detail}"
            for d in self.defects
        ]
        out.append("VALID" if self.valid else f"INVALID ({len(self.defects)} defects)")
        return out


def tile_bbox(t: Tile) -> tuple[float, float, float, float]:
    xs, ys = zip(*(plane_position(v) for v in tile_vertices(t)))
    return (
        min(xs) - _BBOX_MARGIN,
        max(xs) + _BBOX_MARGIN,
        min(ys) - _BBOX_MARGIN,
        max(ys) + _BBOX_MARGIN,
    )


def validate_tiling(doc: TilingDocument) -> ValidationReport:
    """Check a document for edge-to-edge consistency.

    A document is valid when every vertex satisfies the lattice
    congruences, no two tiles are identical, and every tile pair within
    bounding-box range classifies as no contact, vertex-vertex contact
    or perfect edge contact.  Partial-edge contact is a defect: it never
    occurs in a tiling where tiles share whole edges.
    """
    defects: list[Defect] = []
    tiles = doc.tiles
    for idx, t in enumerate(tiles):
        for v in tile_vertices(t):
            if not satisfies_constraints(v):
                defects.append(
                    Defect("constraint", (idx,), f"vertex {v.as_tuple()} violates congruences")
                )
    boxes = [tile_bbox(t) for t in tiles]
    for i in range(len(tiles)):
        xi0, xi1, yi0, yi1 = boxes[i]
        for j in range(i + 1, len(tiles)):
            xj0, xj1, yj0, yj1 = boxes[j]
            if xi1 < xj0 or xj1 < xi0 or yi1 < yj0 or yj1 < yi0:
                continue  # disjoint even with padding: certain no-contact
            if tiles[i] == tiles[j]:
                defects.append(Defect("duplicate", (i, j), "identical tiles"))
                continue
            cls = classify_contact(tiles[i], tiles[j])
            if cls not in ALLOWED_CONTACTS:
                defects.append(Defect("contact", (i, j), cls.value))
    return ValidationReport(tuple(defects))
