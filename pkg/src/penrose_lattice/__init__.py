"""Exact integer-lattice representations of Penrose rhombus tilings."""

from .quadratic import QuadVal, cmp_quad, eval_float, sign_quad
from .lattice import (
    DISPLACEMENTS,
    ORIGIN,
    ConstraintViolationError,
    LatticeVertex,
    NonIntegralRotationError,
    PlanePoint,
    displacement,
    from_primed,
    reflect_y,
    rotate36,
    rotate36_primed,
    satisfies_constraints,
    to_primed,
    vertex_to_plane,
)
from .tiles import (
    DegenerateSharingError,
    Edge,
    Tile,
    TileKind,
    TilingDocument,
    rotate_tile,
    shared_edge,
    tile_edges,
    tile_vertices,
    translate_tile,
)
from .projections import (
    FLAT_STEPS,
    MU,
    FlatPoint,
    MuPoint,
    flatten_mu,
    project_12,
    project_flat,
    project_mu,
)
from .contact import (
    ContactClass,
    IdenticalTilesError,
    ValidationReport,
    classify_contact,
    classify_contact_canonical,
    validate_tiling,
)
from .codec import (
    AmbiguousDecodingError,
    BitGrid,
    FlatCollisionError,
    FlatGraph,
    InconsistentLiftError,
    OriginMissingError,
    UnreconstructableError,
    decode_bits,
    encode_bits,
    infer_edges,
    lift_to_lattice4,
)
from .generator import (
    NoCandidatesError,
    StuckError,
    candidate_placements,
    generate_greedy,
    placement_score,
)
from .formats import (
    ParseError,
    parse_bits,
    parse_tiling,
    serialize_bits,
    serialize_tiling,
)
from .render import appendix_figure_svg, render_obj, render_svg

__all__ = [
    "QuadVal", "cmp_quad", "eval_float", "sign_quad",
    "LatticeVertex", "PlanePoint", "ORIGIN", "DISPLACEMENTS",
    "displacement", "vertex_to_plane", "rotate36", "reflect_y",
    "satisfies_constraints", "to_primed", "from_primed", "rotate36_primed",
    "NonIntegralRotationError", "ConstraintViolationError",
    "Tile", "TileKind", "Edge", "TilingDocument",
    "tile_vertices", "tile_edges", "shared_edge", "translate_tile",
    "rotate_tile", "DegenerateSharingError",
    "FlatPoint", "MuPoint", "MU", "FLAT_STEPS",
    "project_flat", "project_12", "project_mu", "flatten_mu",
    "ContactClass", "classify_contact", "classify_contact_canonical",
    "validate_tiling", "ValidationReport", "IdenticalTilesError",
    "BitGrid", "FlatGraph", "encode_bits", "infer_edges",
    "decode_bits", "lift_to_lattice4",
    "OriginMissingError", "FlatCollisionError", "UnreconstructableError",
    "AmbiguousDecodingError", "InconsistentLiftError",
    "generate_greedy", "candidate_placements", "placement_score",
    "NoCandidatesError", "StuckError",
    "serialize_tiling", "parse_tiling", "serialize_bits", "parse_bits",
    "ParseError",
    "render_svg", "render_obj", "appendix_figure_svg",
]
