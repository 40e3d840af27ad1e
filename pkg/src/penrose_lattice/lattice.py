"""Integer 4D lattice coordinates for tiling vertices.

A vertex at plane position (x, y) with

    x = (x1 + x2*sqrt(5)) / 4
    y = x3*sin(36deg) + x4*sin(72deg)

is stored as the integer quadruple (x1, x2, x3, x4).  Edges of the two
rhombus tiles advance by the ten fundamental displacement vectors at
multiples of 36 degrees; all tiling vertices reachable from the origin
are integer sums of those.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .quadratic import QuadVal, SQRT5, sign_quad

SIN36 = math.sin(math.pi / 5)
SIN72 = math.sin(2 * math.pi / 5)


class NonIntegralRotationError(ValueError):
    """36-degree rotation produced non-integer coordinates.

    Signals a vertex that violates the lattice congruence constraints.
    """


class ConstraintViolationError(ValueError):
    """Vertex fails the congruences required of tiling vertices."""


@dataclass(frozen=True, slots=True, order=True)
class LatticeVertex:
    x1: int
    x2: int
    x3: int
    x4: int

    def __add__(self, other: LatticeVertex) -> LatticeVertex:
        return LatticeVertex(
            self.x1 + other.x1,
            self.x2 + other.x2,
            self.x3 + other.x3,
            self.x4 + other.x4,
        )

    def __sub__(self, other: LatticeVertex) -> LatticeVertex:
        return LatticeVertex(
            self.x1 - other.x1,
            self.x2 - other.x2,
            self.x3 - other.x3,
            self.x4 - other.x4,
        )

    def __neg__(self) -> LatticeVertex:
        return LatticeVertex(-self.x1, -self.x2, -self.x3, -self.x4)

    def __mul__(self, k: int) -> LatticeVertex:
        return LatticeVertex(k * self.x1, k * self.x2, k * self.x3, k * self.x4)

    __rmul__ = __mul__

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.x1, self.x2, self.x3, self.x4)


ORIGIN = LatticeVertex(0, 0, 0, 0)

# Unit steps at angles 0, 36, 72, 108, 144 degrees; the remaining five
# are their negatives.
_BASE_DISPLACEMENTS = (
    LatticeVertex(4, 0, 0, 0),
    LatticeVertex(1, 1, 1, 0),
    LatticeVertex(-1, 1, 0, 1),
    LatticeVertex(1, -1, 0, 1),
    LatticeVertex(-1, -1, 1, 0),
)

DISPLACEMENTS: tuple[LatticeVertex, ...] = _BASE_DISPLACEMENTS + tuple(
    -e for e in _BASE_DISPLACEMENTS
)


def displacement(j: int) -> LatticeVertex:
    """Unit displacement at angle j*36 degrees, j in 0..9."""
    if not 0 <= j <= 9:
        raise IndexError(f"direction index must be in 0..9, got {j}")
    return DISPLACEMENTS[j]


@dataclass(frozen=True, slots=True)
class PlanePoint:
    """Exact plane position of a lattice vertex.

    x = (xq.a + xq.b*sqrt(5)) / 4 and y = y36*sin36 + y72*sin72.
    """

    xq: QuadVal
    y36: int
    y72: int

    def yq(self) -> QuadVal:
        # y = (sin36/2) * (2*y36 + y72 + y72*sqrt5)
        return QuadVal(2 * self.y36 + self.y72, self.y72)

    def x(self) -> float:
        return float(self.xq) / 4.0

    def y(self) -> float:
        return self.y36 * SIN36 + self.y72 * SIN72

    def as_floats(self) -> tuple[float, float]:
        return (self.x(), self.y())


def vertex_to_plane(v: LatticeVertex) -> PlanePoint:
    return PlanePoint(QuadVal(v.x1, v.x2), v.x3, v.x4)


def plane_position(v: LatticeVertex) -> tuple[float, float]:
    """Float plane coordinates of a vertex (rendering only)."""
    return ((v.x1 + v.x2 * SQRT5) / 4.0, v.x3 * SIN36 + v.x4 * SIN72)


# Rotation by 36 degrees is the rational matrix T; 4*T is integral, so T
# is applied as the integer matrix below followed by a divisibility
# check.  A failed check means the input violates the congruences.
_T_TIMES_4 = (
    (1, 5, -10, 0),
    (1, 1, 2, -4),
    (1, -1, 0, 2),
    (0, 2, 2, 2),
)


def rotate36(v: LatticeVertex) -> LatticeVertex:
    """Rotate the vertex's plane image counterclockwise by 36 degrees."""
    out = []
    for row in _T_TIMES_4:
        s = row[0] * v.x1 + row[1] * v.x2 + row[2] * v.x3 + row[3] * v.x4
        if s % 4:
            raise NonIntegralRotationError(
                f"rotation of {v.as_tuple()} is not integral; "
                "vertex violates the lattice congruences"
            )
        out.append(s // 4)
    return LatticeVertex(*out)


def reflect_y(v: LatticeVertex) -> LatticeVertex:
    """Reflect the vertex's plane image about the y axis."""
    return LatticeVertex(-v.x1, -v.x2, v.x3, v.x4)


def satisfies_constraints(v: LatticeVertex) -> bool:
    """Congruences satisfied by every vertex reachable by tile edges:

    x1 + x2 + 2*x3 = 0 (mod 4)  and  x2 + x3 + x4 = 0 (mod 2).
    """
    return (v.x1 + v.x2 + 2 * v.x3) % 4 == 0 and (v.x2 + v.x3 + v.x4) % 2 == 0


Primed = tuple[int, int, int, int]


def to_primed(v: LatticeVertex) -> Primed:
    """Change to the primed coordinates, which range over all of Z^4."""
    a = v.x1 + v.x2 + 2 * v.x3
    b = v.x2 + v.x3 + v.x4
    if a % 4 or b % 2:
        raise ConstraintViolationError(
            f"{v.as_tuple()} violates the lattice congruences"
        )
    return (a // 4, b // 2, v.x3, v.x4)


def from_primed(p: Primed) -> LatticeVertex:
    """Inverse of to_primed; defined for every integer quadruple."""
    p1, p2, p3, p4 = p
    x3, x4 = p3, p4
    x2 = 2 * p2 - x3 - x4
    x1 = 4 * p1 - x2 - 2 * x3
    return LatticeVertex(x1, x2, x3, x4)


# The rotation matrix transported to primed coordinates; entries are all
# 0 or +-1, so no divisibility checks are needed.
_T_PRIMED = (
    (1, 0, -1, 0),
    (1, 0, 0, 0),
    (1, -1, 0, 1),
    (0, 1, 0, 0),
)


def rotate36_primed(p: Primed) -> Primed:
    return tuple(
        row[0] * p[0] + row[1] * p[1] + row[2] * p[2] + row[3] * p[3]
        for row in _T_PRIMED
    )  # type: ignore[return-value]


def cross_sign(a: LatticeVertex, b: LatticeVertex, c: LatticeVertex) -> int:
    """Orientation of c against the directed line a -> b.

    +1 if c lies strictly left, -1 strictly right, 0 on the line.  The
    plane cross product of (b - a) and (c - a) equals sin36/8 times a
    Z[sqrt5] element, and the positive factor is dropped: only the
    integer pair's sign is evaluated.  Uses sin72 = sin36*(1+sqrt5)/2.
    """
    u1 = b.x1 - a.x1
    u2 = b.x2 - a.x2
    uy_a = 2 * (b.x3 - a.x3) + (b.x4 - a.x4)
    uy_b = b.x4 - a.x4
    v1 = c.x1 - a.x1
    v2 = c.x2 - a.x2
    vy_a = 2 * (c.x3 - a.x3) + (c.x4 - a.x4)
    vy_b = c.x4 - a.x4
    # (u1 + u2*r5)(vy_a + vy_b*r5) - (uy_a + uy_b*r5)(v1 + v2*r5)
    ca = u1 * vy_a + 5 * u2 * vy_b - (uy_a * v1 + 5 * uy_b * v2)
    cb = u1 * vy_b + u2 * vy_a - (uy_a * v2 + uy_b * v1)
    return sign_quad(ca, cb)


def plane_compare(u: LatticeVertex, v: LatticeVertex) -> int:
    """Exact lexicographic (x, y) comparison of two vertices' plane images."""
    dx = sign_quad(u.x1 - v.x1, u.x2 - v.x2)
    if dx:
        return dx
    return sign_quad(2 * (u.x3 - v.x3) + (u.x4 - v.x4), u.x4 - v.x4)
