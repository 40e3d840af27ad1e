"""Bit-array representation of tilings over the flat 2D lattice.

Encoding records only which flat lattice points are tiling vertices.
Decoding recovers everything else.  Candidate edges are vertex pairs
differing by one of the ten flat step images, but a candidate is not
necessarily an edge: distinct 4D vertices can differ by a step plus an
element of the flat map's kernel, so they land a step apart without
being adjacent.  Spurious candidates are resolved through the 4D lift:
reconstruction grows tile by tile from the origin, each accepted tile
extending the lift to its corners, and a candidate whose corners' lifts
do not fit its shape exactly can never be accepted.  Tiles are accepted
while any fit (so no fillable pocket is left open), preferring
candidates with two or more already-verified corners; placement
legality is checked with the exact plane contact classifier, never with
flat-coordinate geometry, which distorts distances.
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass

from .lattice import DISPLACEMENTS, ORIGIN, LatticeVertex
from .quadratic import QuadVal, ZERO_QUAD, cmp_quad
from .projections import FLAT_STEPS, FlatPoint, project_flat
from .tiles import Tile, TileKind, TilingDocument, tile_edges, tile_vertices


class CodecError(ValueError):
    pass


class OriginMissingError(CodecError):
    """No tile vertex sits at the origin, which anchors the flat encoding."""


class FlatCollisionError(CodecError):
    """Two distinct 4D vertices share one flat image; the grid would lie."""


class UnreconstructableError(CodecError):
    """No tiling consistent with the bit pattern was found."""


class AmbiguousDecodingError(CodecError):
    """The bit pattern admits conflicting tile completions."""


class InconsistentLiftError(CodecError):
    """A cycle of edges has a nonzero 4D sum; the graph does not come
    from a genuine tiling."""


@dataclass(frozen=True)
class BitGrid:
    """Rectangular 0/1 array over the flat lattice.

    bit (c, r) set means flat point (origin_x + c, origin_y + r) is a
    tiling vertex; row 0 is the lowest Y.  Rows are stored as strings of
    '0'/'1' so grids compare and hash structurally.
    """

    origin_x: int
    origin_y: int
    width: int
    height: int
    rows: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise ValueError("grid dimensions must be positive")
        if len(self.rows) != self.height or any(len(r) != self.width for r in self.rows):
            raise ValueError("row data does not match declared dimensions")
        if any(set(r) - {"0", "1"} for r in self.rows):
            raise ValueError("rows may contain only '0' and '1'")

    @classmethod
    def from_points(cls, points) -> BitGrid:
        pts = set(points)
        if not pts:
            raise ValueError("cannot build a grid from zero points")
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        ox, oy = min(xs), min(ys)
        w = max(xs) - ox + 1
        h = max(ys) - oy + 1
        rows = tuple(
            "".join("1" if (ox + c, oy + r) in pts else "0" for c in range(w))
            for r in range(h)
        )
        return cls(ox, oy, w, h, rows)

    def is_set(self, x: int, y: int) -> bool:
        c, r = x - self.origin_x, y - self.origin_y
        if 0 <= c < self.width and 0 <= r < self.height:
            return self.rows[r][c] == "1"
        return False

    def points(self) -> list[FlatPoint]:
        return [
            (self.origin_x + c, self.origin_y + r)
            for r in range(self.height)
            for c in range(self.width)
            if self.rows[r][c] == "1"
        ]


@dataclass(frozen=True)
class FlatGraph:
    """Flat vertices plus edges labeled by direction index.

    Edge (u, v, j) has u lexicographically smallest and v = u + step(j).
    """

    vertices: frozenset[FlatPoint]
    edges: tuple[tuple[FlatPoint, FlatPoint, int], ...]

    def neighbors(self) -> dict[FlatPoint, list[tuple[FlatPoint, int]]]:
        adj: dict[FlatPoint, list[tuple[FlatPoint, int]]] = {v: [] for v in self.vertices}
        for u, v, j in self.edges:
            adj[u].append((v, j))
            adj[v].append((u, (j + 5) % 10))
        return adj


def encode_bits(doc: TilingDocument) -> BitGrid:
    """Record the flat images of all tile vertices as a minimal grid.

    The document is expected to be valid and to contain the origin
    vertex, which pins the otherwise translation-ambiguous decoding.
    """
    flat_of: dict[FlatPoint, LatticeVertex] = {}
    for t in doc.tiles:
        for v in tile_vertices(t):
            f = project_flat(v)
            prev = flat_of.get(f)
            if prev is None:
                flat_of[f] = v
            elif prev != v:
                raise FlatCollisionError(
                    f"vertices {prev.as_tuple()} and {v.as_tuple()} collide at flat {f}"
                )
    if flat_of.get((0, 0)) != ORIGIN:
        raise OriginMissingError("no tile vertex at the origin")
    return BitGrid.from_points(flat_of)


def infer_edges(grid: BitGrid) -> FlatGraph:
    """All present-vertex pairs one flat step apart, labeled by direction.

    These are candidates only; spurious pairs are resolved in
    decode_bits via the 4D lift.
    """
    pts = set(grid.points())
    edges = []
    for p in sorted(pts):
        for j, (dx, dy) in enumerate(FLAT_STEPS):
            q = (p[0] + dx, p[1] + dy)
            if q in pts and p < q:
                edges.append((p, q, j))
    return FlatGraph(frozenset(pts), tuple(edges))


def flat_graph_of_document(doc: TilingDocument) -> FlatGraph:
    """The genuine edge graph of a document in flat coordinates."""
    edges: set[tuple[FlatPoint, FlatPoint, int]] = set()
    vertices: set[FlatPoint] = set()
    for t in doc.tiles:
        for e in tile_edges(t):
            fu, fv = project_flat(e.u), project_flat(e.v)
            vertices.update((fu, fv))
            d = e.v - e.u
            j = DISPLACEMENTS.index(d)
            if fv < fu:
                fu, fv, j = fv, fu, (j + 5) % 10
            edges.add((fu, fv, j))
    return FlatGraph(frozenset(vertices), tuple(sorted(edges)))


def lift_to_lattice4(
    g: FlatGraph, root: FlatPoint = (0, 0)
) -> dict[FlatPoint, LatticeVertex]:
    """Assign exact 4D coordinates to every flat vertex of a genuine
    edge graph.

    Breadth-first from the root, which lifts to the 4D origin; each tree
    edge adds its labeled displacement vector.  Every non-tree edge is
    then required to agree with the assignment, i.e. all cycle sums must
    vanish, making the lift independent of the path taken.
    """
    if root not in g.vertices:
        raise ValueError(f"root {root} is not a vertex of the graph")
    adj = g.neighbors()
    lifted: dict[FlatPoint, LatticeVertex] = {root: ORIGIN}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v, j in adj[u]:
            target = lifted[u] + DISPLACEMENTS[j]
            known = lifted.get(v)
            if known is None:
                lifted[v] = target
                queue.append(v)
            elif known != target:
                raise InconsistentLiftError(
                    f"edge {u}->{v} lifts to {target.as_tuple()} "
                    f"but the vertex already lifted to {known.as_tuple()}"
                )
    if len(lifted) != len(g.vertices):
        raise ValueError("graph is not connected; lift covers only one component")
    return lifted


# ---------------------------------------------------------------------------
# decoding

# Corner offsets of each (kind, rotation) shape: flat offsets from the
# anchor and the matching 4D displacements.
_SHAPES: list[tuple[TileKind, int, tuple[FlatPoint, ...], tuple[LatticeVertex, ...]]] = []
for _kind, (_i0, _j0) in ((TileKind.NARROW, (1, 2)), (TileKind.WIDE, (0, 2))):
    for _r in range(5):
        _ei = DISPLACEMENTS[(_i0 + _r) % 10]
        _ej = DISPLACEMENTS[(_j0 + _r) % 10]
        _offs4 = (ORIGIN, _ei, _ei + _ej, _ej)
        _SHAPES.append((_kind, _r, tuple(project_flat(o) for o in _offs4), _offs4))

# Tile areas divided by sin36/2: narrow is 2, wide is 1 + sqrt5.
_KIND_AREA = {TileKind.NARROW: QuadVal(2, 0), TileKind.WIDE: QuadVal(1, 1)}


@dataclass
class _Candidate:
    kind: TileKind
    rotation: int
    anchor: FlatPoint
    corners: tuple[FlatPoint, ...]
    offsets4: tuple[LatticeVertex, ...]

    def order_key(self) -> tuple:
        return (self.anchor[1], self.anchor[0], self.kind.value, self.rotation)


def _enumerate_candidates(pts: set[FlatPoint]) -> list[_Candidate]:
    out = []
    for p in pts:
        for kind, r, offs2, offs4 in _SHAPES:
            corners = tuple((p[0] + o[0], p[1] + o[1]) for o in offs2)
            if all(c in pts for c in corners):
                out.append(_Candidate(kind, r, p, corners, offs4))
    out.sort(key=_Candidate.order_key)
    return out


def _flat_interiors_overlap(a: tuple[FlatPoint, ...], b: tuple[FlatPoint, ...]) -> bool:
    """Exact separating-axis test on two counterclockwise flat quads."""
    for poly, other in ((a, b), (b, a)):
        for i in range(4):
            ox, oy = poly[i]
            ex, ey = poly[(i + 1) % 4]
            dx, dy = ex - ox, ey - oy
            if all(dx * (qy - oy) - dy * (qx - ox) <= 0 for qx, qy in other):
                return False
    return True


def _rival_map(candidates: list[_Candidate]) -> list[tuple[int, ...]]:
    """For each candidate, the candidates whose flat interiors overlap it."""
    boxes = []
    for c in candidates:
        xs = [p[0] for p in c.corners]
        ys = [p[1] for p in c.corners]
        boxes.append((min(xs), max(xs), min(ys), max(ys)))
    rivals: list[list[int]] = [[] for _ in candidates]
    for i in range(len(candidates)):
        x0, x1, y0, y1 = boxes[i]
        for j in range(i + 1, len(candidates)):
            u0, u1, v0, v1 = boxes[j]
            if x1 <= u0 or u1 <= x0 or y1 <= v0 or v1 <= y0:
                continue
            if _flat_interiors_overlap(candidates[i].corners, candidates[j].corners):
                rivals[i].append(j)
                rivals[j].append(i)
    return [tuple(r) for r in rivals]


def _implied_anchor(
    cand: _Candidate, lift: dict[FlatPoint, LatticeVertex]
) -> tuple[LatticeVertex | None, int]:
    """Anchor lift implied by the already-lifted corners, with the count
    of corners backing it; (None, 0) when unlifted, (None, -1) on
    contradiction."""
    anchor4: LatticeVertex | None = None
    known = 0
    for corner, off in zip(cand.corners, cand.offsets4):
        got = lift.get(corner)
        if got is None:
            continue
        implied = got - off
        if anchor4 is None:
            anchor4 = implied
        elif anchor4 != implied:
            return (None, -1)
        known += 1
    return (anchor4, known)


# A kill record explains why a candidate can no longer be accepted:
# ("legal", i) lost a plane-overlap fight against acceptance number i,
# ("lift", (i, ...)) contradicted corner lifts written by acceptances i.
_Kill = tuple[str, tuple[int, ...]]


class _Run:
    """One growth attempt; bans are placements excluded by earlier attempts."""

    def __init__(
        self,
        candidates: list[_Candidate],
        rivals: list[tuple[int, ...]],
        banned: set[tuple],
    ):
        self.candidates = candidates
        self.rivals = rivals
        self.banned = banned
        self.lift: dict[FlatPoint, LatticeVertex] = {(0, 0): ORIGIN}
        self.prov: dict[FlatPoint, int] = {(0, 0): -1}  # acceptance that lifted it
        self.accepted: list[Tile] = []
        self.accepted_of: dict[int, int] = {}  # candidate index -> acceptance index
        self.used: set[FlatPoint] = set()
        self.boxes: list = []
        self.kills: dict[int, _Kill] = {}
        self.contested: set[int] = set()  # acceptances that went in still rivaled

    def _colliders(self, tile: Tile) -> tuple[int, ...]:
        """Acceptance indices of every placed tile this placement overlaps."""
        from .contact import classify_contact, tile_bbox, ALLOWED_CONTACTS

        bx = tile_bbox(tile)
        out = []
        for i, (t, (x0, x1, y0, y1)) in enumerate(zip(self.accepted, self.boxes)):
            if bx[1] < x0 or x1 < bx[0] or bx[3] < y0 or y1 < bx[2]:
                continue
            if classify_contact(t, tile) not in ALLOWED_CONTACTS:
                out.append(i)
        return tuple(out)

    def _known(self, idx: int) -> int:
        # side-effect-free corner count for rivalry checks
        _, known = _implied_anchor(self.candidates[idx], self.lift)
        return known

    def _rivaled(self, idx: int) -> bool:
        for r in self.rivals[idx]:
            if r in self.kills or r in self.accepted_of:
                continue
            if self._known(r) >= 1:
                return True
        return False

    def _try_accept(self, min_corners: int, allow_rivaled: bool) -> bool:
        from .contact import tile_bbox

        for idx, cand in enumerate(self.candidates):
            if idx in self.kills or idx in self.accepted_of:
                continue
            anchor4, known = _implied_anchor(cand, self.lift)
            if known < 0:
                culprits = tuple(
                    sorted(
                        {self.prov[c] for c in cand.corners if c in self.prov} - {-1}
                    )
                )
                self.kills[idx] = ("lift", culprits)
                continue
            if known < min_corners or anchor4 is None:
                continue
            if (cand.kind, cand.rotation, cand.anchor, anchor4) in self.banned:
                continue
            rivaled = self._rivaled(idx)
            if not allow_rivaled and rivaled:
                continue
            tile = Tile(cand.kind, cand.rotation, anchor4)
            colliders = self._colliders(tile)
            if colliders:
                self.kills[idx] = ("legal", colliders)
                continue
            acc = len(self.accepted)
            for corner, off in zip(cand.corners, cand.offsets4):
                if corner not in self.lift:
                    self.lift[corner] = anchor4 + off
                    self.prov[corner] = acc
            self.used.update(cand.corners)
            self.accepted.append(tile)
            self.accepted_of[idx] = acc
            self.boxes.append(tile_bbox(tile))
            if rivaled:
                self.contested.add(acc)
            return True
        return False

    def saturate(self) -> None:
        """Accept tiles until nothing fits.

        A candidate that still has a live rival claiming overlapping
        flat territory is deferred while unrivaled placements exist:
        growth elsewhere extends the lift, and the lift eventually
        refutes the impostor of any rival pair (genuine tilings do not
        self-overlap in flat coordinates).  Rivaled placements are
        accepted only as a last resort, which is where the outer search
        over bans takes over.
        """
        while True:
            if self._try_accept(2, False):
                continue
            if self._try_accept(1, False):
                continue
            if self._try_accept(2, True):
                continue
            if not self._try_accept(1, True):
                return

    def suspects_for_bit(self, bit: FlatPoint) -> list[int]:
        """Acceptance indices implicated in every candidate on this bit
        being killed, earliest first."""
        out: set[int] = set()
        for idx, cand in enumerate(self.candidates):
            if bit not in cand.corners:
                continue
            record = self.kills.get(idx)
            if record is not None:
                out.update(record[1])
        return sorted(out)

    def suspects_for_gaps(self) -> list[int]:
        """Acceptances that killed a candidate which, under the final
        lift, still fits its four corners: those killed tiles are where
        untiled gaps come from."""
        out: set[int] = set()
        for idx, record in self.kills.items():
            _, known = _implied_anchor(self.candidates[idx], self.lift)
            if known == 4:
                out.update(record[1])
        return sorted(out)

    def improvement_suspects(self) -> list[int]:
        """Acceptances whose removal could enlarge the covered area.

        An acceptance is worth reconsidering when the candidates it
        blocked, and that still fit their corners under the final lift,
        together outweigh it; banning anything else can only shrink the
        reconstruction.
        """
        blocked: dict[int, QuadVal] = {}
        for idx, (why, culprits) in self.kills.items():
            if why != "legal":
                continue
            _, known = _implied_anchor(self.candidates[idx], self.lift)
            if known != 4:
                continue
            for acc in culprits:
                blocked[acc] = blocked.get(acc, ZERO_QUAD) + _KIND_AREA[
                    self.candidates[idx].kind
                ]
        out = []
        for acc, gain in blocked.items():
            idx = next(i for i, a in self.accepted_of.items() if a == acc)
            if cmp_quad(gain, _KIND_AREA[self.candidates[idx].kind]) > 0:
                out.append(acc)
        return sorted(out)


_MAX_RUNS = 300


def _area_key(doc: TilingDocument) -> QuadVal:
    """Total tile area divided by sin36/2, an exact ring element."""
    total = ZERO_QUAD
    for t in doc.tiles:
        total = total + _KIND_AREA[t.kind]
    return total


def _roundness_rank(doc: TilingDocument) -> list[tuple]:
    """Per-tile greedy choice keys, worst placement first.

    Mirrors the generator's selection key, so that among equal-area
    reconstructions the one a closest-to-origin growth would build
    compares smallest.  Equal ranks force equal documents: the key
    fixes kind, rotation and flat anchor, and the lift fixes the rest.
    """
    keys = []
    for t in doc.tiles:
        ax, ay = project_flat(t.anchor)
        score = max(
            x * x + y * y for x, y in (project_flat(v) for v in tile_vertices(t))
        )
        keys.append((score, t.kind.value, t.rotation, ax, ay))
    keys.sort(reverse=True)
    return keys


def decode_bits(grid: BitGrid) -> TilingDocument:
    """Reconstruct the tiling whose vertices the grid records.

    One growth attempt starts from the lifted origin and repeatedly
    accepts the first candidate tile (ordered by flat anchor Y, X, kind,
    rotation) whose lifted corners fit its shape and whose exact plane
    placement is legal against everything accepted, preferring
    candidates verified by two or more corners.

    A candidate backed by a single shared edge is indistinguishable,
    locally, from a coincidence of step-distance vertices, so an attempt
    can accept a false tile, strand real ones, or cover fewer tiles than
    the genuine tiling.  Attempts are therefore searched: the
    acceptances implicated in stranding a bit, or in blocking more
    fitting area than they cover, are banned one at a time by exact 4D
    placement and growth reruns, best-first on (fewer stranded bits,
    larger covered area), so that removing a false tile rises to the
    front while removing a genuine one sinks.  Among the complete
    reconstructions found, the largest covered area wins, then the
    rounder placement; a remaining tie is a genuine ambiguity of the
    bit pattern and raises AmbiguousDecodingError rather than guessing.
    """
    import heapq

    pts = set(grid.points())
    if (0, 0) not in pts:
        raise OriginMissingError("grid has no set bit at the flat origin")

    candidates = _enumerate_candidates(pts)
    rivals = _rival_map(candidates)
    first_failure: list[str] = []
    successes: dict[TilingDocument, None] = {}
    visited: set[frozenset] = set()
    counter = 0
    heap: list[tuple[tuple, int, frozenset]] = [((0, 0.0), counter, frozenset())]
    budget = _MAX_RUNS

    while heap and budget > 0:
        _, _, banned = heapq.heappop(heap)
        if banned in visited:
            continue
        visited.add(banned)
        budget -= 1
        run = _Run(candidates, rivals, set(banned))
        run.saturate()
        unused = sorted(pts - run.used, key=lambda p: (p[1], p[0]))
        area = sum(float(_KIND_AREA[t.kind]) for t in run.accepted)
        quality = (len(unused), -area)
        if unused:
            if not first_failure:
                first_failure.append(
                    f"set bit {unused[0]} is not a corner of any tile"
                )
            gathered: set[int] = set(run.suspects_for_gaps())
            for bit in unused:
                gathered.update(run.suspects_for_bit(bit))
            suspects = sorted(gathered)
        else:
            successes[_finish(grid, run)] = None
            suspects = run.improvement_suspects()
        # contested acceptances won a rivalry by order, not by evidence;
        # reconsider those first
        suspects = [a for a in suspects if a in run.contested] + [
            a for a in suspects if a not in run.contested
        ]
        for acc in suspects:
            idx = next(i for i, a in run.accepted_of.items() if a == acc)
            c = candidates[idx]
            child = banned | {(c.kind, c.rotation, c.anchor, run.accepted[acc].anchor)}
            if child not in visited:
                counter += 1
                heapq.heappush(heap, (quality, counter, child))
    if not successes:
        raise UnreconstructableError(
            first_failure[0] if first_failure else "no consistent tiling found"
        )
    areas = {d: _area_key(d) for d in successes}

    def prefer(a: TilingDocument, b: TilingDocument) -> int:
        c = cmp_quad(areas[a], areas[b])
        if c:
            return c  # larger covered area wins
        ra, rb = _roundness_rank(a), _roundness_rank(b)
        if ra != rb:
            return 1 if ra < rb else -1  # rounder placement wins
        return 0

    best = max(successes, key=functools.cmp_to_key(prefer))
    for d in successes:
        if d != best and prefer(d, best) == 0:
            raise AmbiguousDecodingError(
                "distinct reconstructions tie under every canonical criterion"
            )
    return best


def _finish(grid: BitGrid, run: _Run) -> TilingDocument:
    from .contact import validate_tiling

    pairs = sorted(
        ((run.candidates[idx].order_key(), acc) for idx, acc in run.accepted_of.items())
    )
    doc = TilingDocument(tuple(run.accepted[acc] for _, acc in pairs))

    if encode_bits(doc) != grid:
        raise UnreconstructableError("reconstruction does not reproduce the grid")
    report = validate_tiling(doc)
    if not report.valid:
        raise UnreconstructableError(
            f"reconstruction is not a legal tiling: {report.lines()[0]}"
        )
    return doc
