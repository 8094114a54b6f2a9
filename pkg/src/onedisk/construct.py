"""Constructions that realize the extremal edge counts.

Two procedures live here.  The first builds, for part sizes x <= y with
y >= 3(x-2), a bipartite graph together with a drawing that has every X
vertex on one face and exactly 3x + 2y - 6 edges: a maximal outerplanar
scaffold on the X vertices is triangulated, a fixed crossing gadget is
placed inside every inner triangle, the scaffold edges are discarded,
and leftover Y vertices are nested onto one hull pair.  The second takes
any drawing with an all-X face and glues a mirror image to it along the
X vertices, doubling the edge count while keeping 1-planarity.

Everything geometric happens in a staging builder that records straight
line positions; rotations fall out of sorting incident segments by
angle, which keeps the combinatorics impossible to get wrong by hand.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .drawing import (
    Drawing,
    FaceWalk,
    NoOneDiskFace,
    build_drawing,
    find_one_disk_face,
    rotation_faces,
)
from .graph import BipartiteGraph, Edge, new_bipartite

Point = tuple[float, float]


class ConstructError(ValueError):
    """A construction precondition failed."""


class KTooSmall(ConstructError):
    """Maximal outerplanar scaffolds need at least three vertices."""


class NotATriangle(ConstructError):
    """The face handed to the gadget insertion is not an open inner triangle."""


class UncoveredRegime(ConstructError):
    """No extremal construction is available for x >= 4 with y < 3(x-2)."""


# ---------------------------------------------------------------------------
# Geometry helpers
# ---------------------------------------------------------------------------

_ANGLE_GAP = 1e-12


def _ccw_order(center: Point, spokes: list[tuple[int, Point]]) -> tuple[int, ...]:
    """Neighbor ids sorted counterclockwise by bearing from ``center``."""
    cx, cy = center
    keyed = sorted((math.atan2(py - cy, px - cx), node) for node, (px, py) in spokes)
    if len(keyed) > 1:
        wrapped = keyed + [(keyed[0][0] + 2.0 * math.pi, keyed[0][1])]
        for (a0, n0), (a1, n1) in zip(wrapped, wrapped[1:]):
            if a1 - a0 < _ANGLE_GAP:
                raise RuntimeError(
                    f"degenerate layout: spokes {n0} and {n1} are collinear"
                )
    return tuple(node for _, node in keyed)


def _segment_crossing_point(p1: Point, p2: Point, p3: Point, p4: Point) -> Point:
    """Interior intersection of segments p1p2 and p3p4."""
    d1x, d1y = p2[0] - p1[0], p2[1] - p1[1]
    d2x, d2y = p4[0] - p3[0], p4[1] - p3[1]
    denom = d1x * d2y - d1y * d2x
    if denom == 0.0:
        raise RuntimeError("gadget segments are parallel; placement degenerate")
    rx, ry = p3[0] - p1[0], p3[1] - p1[1]
    t = (rx * d2y - ry * d2x) / denom
    s = (rx * d1y - ry * d1x) / denom
    if not (1e-3 < t < 1.0 - 1e-3 and 1e-3 < s < 1.0 - 1e-3):
        raise RuntimeError("gadget segments do not cross transversally")
    return (p1[0] + t * d1x, p1[1] + t * d1y)


def _barycentric(corners: tuple[Point, Point, Point], weights) -> Point:
    (x0, y0), (x1, y1), (x2, y2) = corners
    w0, w1, w2 = weights
    return (w0 * x0 + w1 * x1 + w2 * x2, w0 * y0 + w1 * y1 + w2 * y2)


# ---------------------------------------------------------------------------
# Maximal outerplanar scaffolds
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OuterplanarSkeleton:
    """A triangulated convex polygon: the all-X scaffold of the construction.

    Holds its own rotation system directly (the scaffold is one-part, so
    it cannot be a bipartite Drawing).  ``triangles`` are the k - 2 inner
    faces, ``outer_face`` the hull walk.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    rotation: dict[int, tuple[int, ...]]
    positions: dict[int, Point]
    outer_face: FaceWalk
    triangles: tuple[FaceWalk, ...]


def _parse_strategy(strategy: str) -> tuple[str, int | None]:
    s = str(strategy).strip().lower()
    if s == "fan":
        return "fan", None
    if s == "zigzag":
        return "zigzag", None
    if s.startswith("seed:"):
        return "seed", int(s.split(":", 1)[1])
    raise ValueError(f"unknown triangulation strategy {strategy!r}")


def _fan_chords(k: int) -> list[Edge]:
    return [(0, i) for i in range(2, k - 1)]


def _zigzag_chords(k: int) -> list[Edge]:
    chords: list[Edge] = []
    lo, hi = 1, k - 1
    advance_lo = True
    while hi - lo >= 2:
        chords.append((lo, hi))
        if advance_lo:
            lo += 1
        else:
            hi -= 1
        advance_lo = not advance_lo
    return chords


def _seeded_chords(k: int, seed: int) -> list[Edge]:
    rng = random.Random(seed)
    poly = list(range(k))
    chords: list[Edge] = []
    while len(poly) > 3:
        i = rng.randrange(len(poly))
        a, b = poly[i - 1], poly[(i + 1) % len(poly)]
        chords.append((min(a, b), max(a, b)))
        del poly[i]
    return chords


def maximal_outerplanar(k: int, strategy: str = "fan") -> OuterplanarSkeleton:
    """Triangulate the convex polygon 0..k-1; 2k - 3 edges, k - 2 triangles.

    Strategies: ``fan`` (chords 0-i), ``zigzag`` (alternating two-pointer
    chords), ``seed:<n>`` (seeded random ear cutting).  All yield the same
    counts; only the triangle shapes differ.
    """
    if k < 3:
        raise KTooSmall(f"need at least 3 vertices, got {k}")
    kind, seed = _parse_strategy(strategy)
    if kind == "fan":
        chords = _fan_chords(k)
    elif kind == "zigzag":
        chords = _zigzag_chords(k)
    else:
        chords = _seeded_chords(k, seed)

    hull = [(i, (i + 1) % k) for i in range(k)]
    edges = sorted(tuple(sorted(e)) for e in hull + chords)
    positions: dict[int, Point] = {
        i: (math.cos(2.0 * math.pi * i / k), math.sin(2.0 * math.pi * i / k))
        for i in range(k)
    }
    spokes: dict[int, list[tuple[int, Point]]] = {i: [] for i in range(k)}
    for u, v in edges:
        spokes[u].append((v, positions[v]))
        spokes[v].append((u, positions[u]))
    rotation = {v: _ccw_order(positions[v], sp) for v, sp in spokes.items()}

    faces = rotation_faces(rotation)
    if len(faces) != k - 1:
        raise RuntimeError(f"scaffold tracing produced {len(faces)} faces for k={k}")
    # The hull side of edge {0, k-1} traversed k-1 -> 0 lies on the unbounded
    # face under the ccw rotation convention used throughout.
    outer = next(f for f in faces if (k - 1, 0) in f.steps)
    triangles = tuple(f for f in faces if f is not outer)
    if any(len(t) != 3 for t in triangles):
        raise RuntimeError("scaffold has a non-triangular inner face")
    return OuterplanarSkeleton(k, tuple(edges), rotation, positions, outer, triangles)


# ---------------------------------------------------------------------------
# Staged drawings and the crossing gadget
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _PlacedCrossing:
    edge_a: Edge
    edge_b: Edge
    point: Point


@dataclass(frozen=True)
class B3Pattern:
    """Bookkeeping for one inserted gadget: ids of the pieces it added."""

    corners: tuple[int, int, int]
    interior: tuple[int, int, int]
    crossings: tuple[tuple[Edge, Edge], ...]


# Straight-line template for the gadget: triangle corners plus three
# interior vertices (as barycentric weights), each joined to all three
# corners.  Three of the nine segments cross pairwise-disjoint partners;
# the diagonally opposite interior-corner segments stay clean.
_GADGET_INTERIOR_WEIGHTS = (
    (5 / 12, 7 / 24, 7 / 24),
    (1 / 4, 7 / 16, 5 / 16),
    (1 / 4, 5 / 16, 7 / 16),
)
_GADGET_CROSSING_PAIRS = (
    ((1, 0), (0, 1)),
    ((2, 0), (0, 2)),
    ((1, 2), (2, 1)),
)


class DrawingBuilder:
    """Drawing under construction: a straight-line staging area.

    Records positions for every vertex and crossing point; the rotation
    system is derived at the end by sorting incident segments around each
    node.  Scaffold edges participate in the geometry but are dropped
    from the finished bipartite drawing.
    """

    def __init__(self, scaffold: OuterplanarSkeleton):
        self._scaffold_count = scaffold.vertex_count
        self._scaffold_edges = list(scaffold.edges)
        self._positions: dict[int, Point] = dict(scaffold.positions)
        self._edges: list[Edge] = []
        self._crossings: list[_PlacedCrossing] = []
        self._pending: list[FaceWalk] = list(scaffold.triangles)
        self._outer = scaffold.outer_face

    @property
    def scaffold_count(self) -> int:
        return self._scaffold_count

    @property
    def y_count(self) -> int:
        return len(self._positions) - self._scaffold_count

    def position(self, v: int) -> Point:
        return self._positions[v]

    def add_y_vertex(self, point: Point) -> int:
        vid = len(self._positions)
        self._positions[vid] = point
        return vid

    def add_edge(self, u: int, v: int) -> Edge:
        e = (min(u, v), max(u, v))
        self._edges.append(e)
        return e

    def add_crossing(self, edge_a: Edge, edge_b: Edge, point: Point) -> None:
        self._crossings.append(_PlacedCrossing(edge_a, edge_b, point))

    def claim_triangle(self, face: FaceWalk) -> FaceWalk:
        """Remove and return the matching open inner triangle."""
        if len(face) != 3 or len(set(face.nodes)) != 3:
            raise NotATriangle(f"face walk of length {len(face)} is not a triangle")
        if face == self._outer:
            raise NotATriangle("the outer face is not an inner triangle")
        for i, tri in enumerate(self._pending):
            if tri == face:
                return self._pending.pop(i)
        raise NotATriangle("face is not an open inner triangle of this scaffold")

    def derive_rotation(self, include_scaffold: bool = False) -> dict[int, tuple[int, ...]]:
        """Rotation system for the current geometry, by angular sort."""
        edges = list(self._edges)
        if include_scaffold:
            edges += self._scaffold_edges
        n = len(self._positions)
        crossed: dict[Edge, int] = {}
        for i, pc in enumerate(self._crossings):
            crossed[pc.edge_a] = n + i
            crossed[pc.edge_b] = n + i
        spokes: dict[int, list[tuple[int, Point]]] = {v: [] for v in self._positions}
        centers: dict[int, Point] = dict(self._positions)
        for i, pc in enumerate(self._crossings):
            spokes[n + i] = []
            centers[n + i] = pc.point
        for e in edges:
            u, v = e
            if e in crossed:
                d = crossed[e]
                spokes[u].append((d, centers[d]))
                spokes[v].append((d, centers[d]))
                spokes[d].append((u, centers[u]))
                spokes[d].append((v, centers[v]))
            else:
                spokes[u].append((v, centers[v]))
                spokes[v].append((u, centers[u]))
        return {v: _ccw_order(centers[v], sp) for v, sp in spokes.items()}

    def finish(self) -> tuple[BipartiteGraph, Drawing]:
        """Drop the scaffold edges and assemble the validated drawing."""
        g = new_bipartite(self._scaffold_count, self.y_count, self._edges)
        rotation = self.derive_rotation(include_scaffold=False)
        pairs = [(pc.edge_a, pc.edge_b) for pc in self._crossings]
        return g, build_drawing(g, pairs, rotation)


def insert_b3(builder: DrawingBuilder, triangle: FaceWalk) -> B3Pattern:
    """Place the crossing gadget inside one open inner triangle.

    Adds three Y vertices joined to all three corners (nine edges) and
    the gadget's three crossings, positioned so everything stays strictly
    inside the triangle.  The triangle is consumed; inserting into the
    outer face, a filled triangle, or any other walk raises NotATriangle.
    """
    claimed = builder.claim_triangle(triangle)
    corners = claimed.nodes
    corner_pts = tuple(builder.position(c) for c in corners)
    interior = tuple(
        builder.add_y_vertex(_barycentric(corner_pts, w)) for w in _GADGET_INTERIOR_WEIGHTS
    )
    edge_of: dict[tuple[int, int], Edge] = {}
    for bi, b in enumerate(interior):
        for ci, c in enumerate(corners):
            edge_of[(bi, ci)] = builder.add_edge(c, b)
    crossings: list[tuple[Edge, Edge]] = []
    for (bi1, ci1), (bi2, ci2) in _GADGET_CROSSING_PAIRS:
        e1, e2 = edge_of[(bi1, ci1)], edge_of[(bi2, ci2)]
        point = _segment_crossing_point(
            builder.position(interior[bi1]),
            corner_pts[ci1],
            builder.position(interior[bi2]),
            corner_pts[ci2],
        )
        builder.add_crossing(e1, e2, point)
        crossings.append((e1, e2))
    return B3Pattern(corners, interior, tuple(crossings))


# ---------------------------------------------------------------------------
# The extremal family
# ---------------------------------------------------------------------------


def _two_column(y: int) -> tuple[BipartiteGraph, Drawing]:
    """x = 2: every Y vertex joins both X vertices, drawn nested, planar."""
    g = new_bipartite(2, y, [(i, 2 + j) for j in range(y) for i in (0, 1)])
    ys = tuple(range(2, 2 + y))
    rotation: dict[int, tuple[int, ...]] = {0: ys, 1: tuple(reversed(ys))}
    for v in ys:
        rotation[v] = (0, 1)
    return g, build_drawing(g, [], rotation)


def _attach_nested_pair(builder: DrawingBuilder, count: int) -> list[int]:
    """Nest ``count`` degree-2 Y vertices onto hull vertices 0 and 1.

    They sit outside the hull along the bisector of the arc 0-1, stacked
    outward, so their edges neither cross anything nor block any hull
    vertex from the unbounded face.
    """
    k = builder.scaffold_count
    mid = math.pi / k
    added = []
    for i in range(count):
        r = 1.0 + 0.35 * (i + 1)
        w = builder.add_y_vertex((r * math.cos(mid), r * math.sin(mid)))
        builder.add_edge(0, w)
        builder.add_edge(1, w)
        added.append(w)
    return added


def construct_extremal(
    x: int, y: int, strategy: str = "fan"
) -> tuple[BipartiteGraph, Drawing]:
    """Bipartite graph plus all-X-face drawing with exactly 3x + 2y - 6 edges.

    Covered regimes: x = 2 (any y >= 2, nested and crossing-free) and
    x >= 3 with y = 3(x-2) + t for t >= 0 (one gadget per scaffold
    triangle, then t nested degree-2 vertices).  For x >= 4 with
    x <= y < 3(x-2) no construction is known; UncoveredRegime is raised.
    """
    if x < 2:
        raise ValueError(f"need x >= 2, got {x}")
    if y < x:
        raise ValueError(f"need y >= x, got x={x}, y={y}")
    if x == 2:
        return _two_column(y)
    t = y - 3 * (x - 2)
    if t < 0:
        raise UncoveredRegime(
            f"no construction covers x={x}, y={y} (requires y >= {3 * (x - 2)})"
        )
    scaffold = maximal_outerplanar(x, strategy)
    builder = DrawingBuilder(scaffold)
    for tri in scaffold.triangles:
        insert_b3(builder, tri)
    if t:
        _attach_nested_pair(builder, t)
    return builder.finish()


# ---------------------------------------------------------------------------
# Doubling along the disk face
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DoublingResult:
    """Mirror-glued drawing: |V*| = |X| + 2|Y| and |E*| = 2|E|."""

    graph_star: BipartiteGraph
    drawing_star: Drawing


def _disk_gap(walk: FaceWalk, v: int) -> tuple[int, int]:
    """Neighbors (p, q) bounding the first visit of the walk at v."""
    steps = walk.steps
    for j, (_, b) in enumerate(steps):
        if b == v:
            nxt = steps[(j + 1) % len(steps)]
            return steps[j][0], nxt[1]
    raise NoOneDiskFace(f"X vertex {v} does not lie on the disk face")


def double(d: Drawing) -> DoublingResult:
    """Glue a mirror image of the drawing to itself along the X vertices.

    The copy duplicates every Y vertex and crossing and reverses every
    cyclic order; at each X vertex the original rotation and the mirrored
    one are concatenated inside the gap where the all-X face passed.  The
    result is a 1-planar drawing of a bipartite graph on X and the two Y
    copies with twice the edges.
    """
    disk = find_one_disk_face(d)
    if disk is None:
        raise NoOneDiskFace("drawing has no face incident to every X vertex")
    g = d.graph
    x, y, c = g.x_count, g.y_count, len(d.crossings)
    n = x + y
    star_n = x + 2 * y

    def keep(v: int) -> int:
        return v if v < n else star_n + (v - n)

    def mirror(v: int) -> int:
        if v < x:
            return v
        if v < n:
            return v + y
        return star_n + c + (v - n)

    def mirror_edge(e: Edge) -> Edge:
        return (e[0], e[1] + y)

    g_star = new_bipartite(
        x, 2 * y, list(g.edges) + [mirror_edge(e) for e in g.edges]
    )
    pairs = [(cr.edge_a, cr.edge_b) for cr in d.crossings]
    pairs += [(mirror_edge(cr.edge_a), mirror_edge(cr.edge_b)) for cr in d.crossings]

    rot: dict[int, tuple[int, ...]] = {}
    for v in range(x, n + c):
        rot[keep(v)] = tuple(keep(w) for w in d.rotation[v])
        rot[mirror(v)] = tuple(mirror(w) for w in reversed(d.rotation[v]))
    for v in range(x):
        p, q = _disk_gap(disk, v)
        r = d.rotation[v]
        i = r.index(q)
        linear = r[i:] + r[:i]
        if linear[-1] != p:
            raise RuntimeError("disk face walk disagrees with the rotation system")
        rot[v] = tuple(keep(w) for w in linear) + tuple(
            mirror(w) for w in reversed(linear)
        )

    return DoublingResult(g_star, build_drawing(g_star, pairs, rot))
