"""SVG and OBJ renderers for the various lattice views.

SVG modes:

* ``plane``         exact plane positions evaluated to float
* ``flat``          the integer 2D lattice representation
* ``one-two-iso``   orthographic view of the (1,2)-projection
* ``mu-iso``        orthographic view of the mu-projection
* ``mu-flattened``  the mu-projection viewed along (sqrt5, -1, 0), which
                    is the original tiling rescaled by mu
The iso views project along (1, 1, 2)/sqrt(6) with screen basis
u = (1, -1, 0)/sqrt(2), v = (1, 1, -1)/sqrt(3); that direction is
presentation-only.  SVG y grows downward, so plotted y is negated.

OBJ modes ``one-two`` and ``mu`` emit one quad face per tile; the
(1,2)-projection writes its integer coordinates verbatim.
"""

from __future__ import annotations

import math
from collections.abc import Callable

from .contact import ContactClass, classify_contact_canonical
from .lattice import (
    SIN36,
    SIN72,
    DISPLACEMENTS,
    LatticeVertex,
    plane_position,
)
from .projections import flatten_mu, project_12, project_mu
from .quadratic import SQRT5
from .tiles import TileKind, TilingDocument, tile_vertices

SVG_MODES = ("plane", "flat", "one-two-iso", "mu-iso", "mu-flattened")
OBJ_MODES = ("one-two", "mu")

_ISO_U = (1 / math.sqrt(2), -1 / math.sqrt(2), 0.0)
_ISO_V = (1 / math.sqrt(3), 1 / math.sqrt(3), -1 / math.sqrt(3))


def _iso(p: tuple[float, float, float]) -> tuple[float, float]:
    return (
        p[0] * _ISO_U[0] + p[1] * _ISO_U[1] + p[2] * _ISO_U[2],
        p[0] * _ISO_V[0] + p[1] * _ISO_V[1] + p[2] * _ISO_V[2],
    )


def _projector(mode: str) -> Callable[[LatticeVertex], tuple[float, float]]:
    if mode == "plane":
        return plane_position
    if mode == "flat":
        return lambda v: tuple(map(float, (v.x1 + 2 * v.x2, v.x3 + 2 * v.x4)))
    if mode == "one-two-iso":
        return lambda v: _iso(tuple(map(float, project_12(v))))
    if mode == "mu-iso":
        return lambda v: _iso(project_mu(v).as_floats())
    if mode == "mu-flattened":
        return lambda v: flatten_mu(project_mu(v))
    raise ValueError(f"unknown SVG mode {mode!r}; choose from {SVG_MODES}")


_FILL = {TileKind.NARROW: "#9ecae1", TileKind.WIDE: "#fdd49e"}

_SVG_STYLE = "stroke:#333;stroke-width:0.02;stroke-linejoin:round"


def _fmt(x: float) -> str:
    return f"{x:.9f}"


def render_svg(doc: TilingDocument, mode: str) -> str:
    """One polygon per tile in the chosen view."""
    proj = _projector(mode)
    polys = []
    pts_all = []
    for t in doc.tiles:
        pts = [proj(v) for v in tile_vertices(t)]
        pts_all.extend(pts)
        body = " ".join(f"{_fmt(x)},{_fmt(-y)}" for x, y in pts)
        polys.append(
            f'<polygon class="{t.kind.name.lower()}" fill="{_FILL[t.kind]}" '
            f'points="{body}"/>'
        )
    if pts_all:
        xs = [p[0] for p in pts_all]
        ys = [-p[1] for p in pts_all]
        margin = 0.5 if mode != "flat" else 2.0
        x0, y0 = min(xs) - margin, min(ys) - margin
        w, h = max(xs) - min(xs) + 2 * margin, max(ys) - min(ys) + 2 * margin
    else:
        x0 = y0 = -1.0
        w = h = 2.0
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">',
        f'<g style="{_SVG_STYLE}">',
        *polys,
        "</g>",
        "</svg>",
    ]
    return "\n".join(lines) + "\n"


def render_obj(doc: TilingDocument, mode: str) -> str:
    """Quad mesh of the 3D representation, vertices deduplicated."""
    if mode == "one-two":
        def coords(v: LatticeVertex) -> str:
            return "v {} {} {}".format(*project_12(v))
    elif mode == "mu":
        def coords(v: LatticeVertex) -> str:
            p = project_mu(v).as_floats()
            return f"v {_fmt(p[0])} {_fmt(p[1])} {_fmt(p[2])}"
    else:
        raise ValueError(f"unknown OBJ mode {mode!r}; choose from {OBJ_MODES}")
    index: dict[LatticeVertex, int] = {}
    vlines: list[str] = []
    faces: list[str] = []
    for t in doc.tiles:
        ids = []
        for v in tile_vertices(t):
            if v not in index:
                index[v] = len(index) + 1
                vlines.append(coords(v))
            ids.append(index[v])
        faces.append("f {} {} {} {}".format(*ids))
    return "\n".join(vlines + faces) + "\n"


# Marker shapes for the contact-class point cloud: (filled, radius),
# keyed by class.  Filled disks mark perfect edge (large), vertex-vertex
# (medium) and no contact (small); open circles mark vertex/partial edge
# (medium) and area overlap (small).
_MARKERS = {
    ContactClass.PERFECT_EDGE: (True, 0.1),
    ContactClass.VERTEX_VERTEX: (True, 0.05),
    ContactClass.NO_CONTACT: (True, 0.025),
    ContactClass.VERTEX_OR_PARTIAL_EDGE: (False, 0.05),
    ContactClass.AREA_OVERLAP: (False, 0.025),
}

CONTACT_CSS_CLASS = {
    ContactClass.NO_CONTACT: "no-contact",
    ContactClass.VERTEX_VERTEX: "vertex-vertex",
    ContactClass.VERTEX_OR_PARTIAL_EDGE: "vertex-or-partial-edge",
    ContactClass.PERFECT_EDGE: "perfect-edge",
    ContactClass.AREA_OVERLAP: "area-overlap",
}

APPENDIX_RANGES = ((-5, 5), (-3, 3), (-2, 2), (-2, 2))
APPENDIX_WINDOW = 2.0


def appendix_figure_classes() -> list[tuple[LatticeVertex, ContactClass]]:
    """Classified displacement grid restricted to the figure window
    |x| < 2, |y| < 2."""
    out = []
    (a1, b1), (a2, b2), (a3, b3), (a4, b4) = APPENDIX_RANGES
    for x1 in range(a1, b1 + 1):
        for x2 in range(a2, b2 + 1):
            for x3 in range(a3, b3 + 1):
                for x4 in range(a4, b4 + 1):
                    d = LatticeVertex(x1, x2, x3, x4)
                    x, y = plane_position(d)
                    if abs(x) < APPENDIX_WINDOW and abs(y) < APPENDIX_WINDOW:
                        out.append((d, classify_contact_canonical(d)))
    return out


def appendix_figure_svg() -> str:
    """The diagnostic point cloud for the canonical orientation pair.

    Every displacement in the grid window becomes a marker at its plane
    position; the reference narrow tile at the origin and the wide tile
    outline are drawn on top.
    """
    marks = []
    for d, cls in appendix_figure_classes():
        x, y = plane_position(d)
        filled, radius = _MARKERS[cls]
        paint = 'fill="#000"' if filled else 'fill="none" stroke="#000" stroke-width="0.01"'
        marks.append(
            f'<circle class="{CONTACT_CSS_CLASS[cls]}" cx="{_fmt(x)}" cy="{_fmt(-y)}" '
            f'r="{radius}" {paint}/>'
        )
    c36, s36 = math.cos(math.pi / 5), SIN36
    c72, s72 = math.cos(2 * math.pi / 5), SIN72

    def path(points: list[tuple[float, float]]) -> str:
        body = " ".join(f"{_fmt(x)},{_fmt(-y)}" for x, y in points)
        return f'<polyline fill="none" stroke="#555" stroke-width="0.02" points="{body}"/>'

    narrow = [(0, 0), (c36, s36), (c36 + c72, s36 + s72), (c72, s72), (0, 0)]
    offset = (c36 - 0.5, -s72 - s36)
    wide = [
        (offset[0] + dx, offset[1] + dy)
        for dx, dy in ((0, 0), (1, 0), (1 + c72, s72), (c72, s72), (0, 0))
    ]
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="-2.2 -2.2 4.4 4.4">',
        *marks,
        path(narrow),
        path(wide),
        "</svg>",
    ]
    return "\n".join(lines) + "\n"
