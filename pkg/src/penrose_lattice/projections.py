"""Lower-dimensional lattice views of the 4D representation.

Three maps:

* the mu-projection to 3D, whose further orthographic projection
  perpendicular to (sqrt5, -1, 0) reproduces the original tiling scaled
  by mu = 2*sqrt(2/3);
* the (1,2)-projection to 3D with all-integer images;
* the flat 2D map (x1 + 2*x2, x3 + 2*x4), an integer rescale of the
  rational matrix ((1/4, 1/2, 0, 0), (0, 0, 1/2, 1)) so that all
  coordinates stay integral.

The flat map is additive, so a tile's flat shape depends only on its
kind and rotation, never its position; its ten step images are pairwise
distinct, which is what makes edges recoverable from vertices alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .lattice import DISPLACEMENTS, SIN36, SIN72, LatticeVertex
from .quadratic import SQRT5

MU = 2.0 * math.sqrt(2.0 / 3.0)

FlatPoint = tuple[int, int]


def project_flat(v: LatticeVertex) -> FlatPoint:
    return (v.x1 + 2 * v.x2, v.x3 + 2 * v.x4)


FLAT_STEPS: tuple[FlatPoint, ...] = tuple(project_flat(e) for e in DISPLACEMENTS)

# Step image -> direction index; total because the ten images are distinct.
FLAT_STEP_INDEX: dict[FlatPoint, int] = {s: j for j, s in enumerate(FLAT_STEPS)}


def project_12(v: LatticeVertex) -> tuple[int, int, int]:
    """The all-integer 3D image (x1, x2, x3 + 2*x4)."""
    return (v.x1, v.x2, v.x3 + 2 * v.x4)


@dataclass(frozen=True, slots=True)
class MuPoint:
    """3D image under the mu-projection.

    x and y are the integers (x1, x2); the height is kept exact as the
    pair (z36, z72) denoting z = mu*(z36*sin36 + z72*sin72), with mu
    applied only at float render time.
    """

    x1: int
    x2: int
    z36: int
    z72: int

    def z(self) -> float:
        return MU * (self.z36 * SIN36 + self.z72 * SIN72)

    def as_floats(self) -> tuple[float, float, float]:
        return (float(self.x1), float(self.x2), self.z())


def project_mu(v: LatticeVertex) -> MuPoint:
    return MuPoint(v.x1, v.x2, v.x3, v.x4)


def flatten_mu(p: MuPoint) -> tuple[float, float]:
    """Orthographic view of a mu-projected point along (sqrt5, -1, 0).

    Basis (1, sqrt5, 0)/sqrt6 and (0, 0, 1); the result is the original
    plane position scaled uniformly by mu.
    """
    return ((p.x1 + SQRT5 * p.x2) / math.sqrt(6.0), p.z())
