"""Combinatorial 1-planar drawings stored as planarizations.

A drawing of a bipartite graph is held without coordinates: the abstract
graph, a list of crossings (each one a degree-4 dummy node splitting two
independent edges into segments), and a rotation system assigning every
planarization node the counterclockwise cyclic order of its incident
segments.  Because each edge is crossed at most once and crossing edges
share no endpoint, the planarization is itself a simple graph, so a
rotation is simply a cyclic sequence of neighbor node ids.

Faces are recovered by the standard successor walk: after arriving at v
along segment (u, v), leave along (v, w) where w follows u in the cyclic
order at v.  A connected rotation system describes a sphere drawing
exactly when the traced face count F satisfies V - E + F = 2; that check
is what separates a genuine plane drawing from a higher-genus rotation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .graph import BipartiteGraph, Edge


class DrawingError(ValueError):
    """The supplied structure is not a valid 1-planar drawing."""


class EdgeCrossedTwice(DrawingError):
    """An edge appears in more than one crossing."""


class AdjacentEdgesCross(DrawingError):
    """A crossing pairs two edges that share an endpoint."""


class NonAlternatingDummy(DrawingError):
    """A dummy's rotation does not interleave the two crossing edges."""


class IncompleteRotation(DrawingError):
    """The rotation map misses a node or mismatches its incident segments."""


class DisconnectedPlanarization(DrawingError):
    """The planarization is not connected."""


class NotPlanarEmbedding(DrawingError):
    """Face tracing contradicts Euler's formula: the rotation has genus > 0."""


class NoOneDiskFace(DrawingError):
    """No face of the planarization is incident to every X vertex."""


# ---------------------------------------------------------------------------
# Face walks and the generic tracing engine
# ---------------------------------------------------------------------------

Step = tuple[int, int]


@dataclass(frozen=True, eq=False)
class FaceWalk:
    """One face of an embedding: a cyclic sequence of directed segments.

    Each step (u, v) is the side of segment {u, v} traversed from u to v.
    Equality and hashing are cyclic: rotations of the same step sequence
    compare equal, reversed walks do not.
    """

    steps: tuple[Step, ...]

    def canonical(self) -> tuple[Step, ...]:
        k = len(self.steps)
        if k == 0:
            return self.steps
        best = min(range(k), key=lambda i: self.steps[i:] + self.steps[:i])
        return self.steps[best:] + self.steps[:best]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FaceWalk):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def nodes(self) -> tuple[int, ...]:
        """Visited nodes in walk order (may repeat)."""
        return tuple(u for u, _ in self.steps)

    def visits(self, node: int) -> bool:
        return any(u == node for u, _ in self.steps)

    def visits_all(self, nodes: Iterable[int]) -> bool:
        here = set(self.nodes)
        return all(v in here for v in nodes)


def rotation_faces(rotation: Mapping[int, Sequence[int]]) -> list[FaceWalk]:
    """Trace all face walks of the rotation system, graph type agnostic.

    Requires a symmetric adjacency (u in rotation[v] iff v in rotation[u])
    with no repeated neighbors; raises ValueError otherwise.  Every
    directed segment side lands in exactly one returned walk.
    """
    succ: dict[int, dict[int, int]] = {}
    for v, nbrs in rotation.items():
        if len(set(nbrs)) != len(nbrs):
            raise ValueError(f"rotation at {v} repeats a neighbor")
        succ[v] = {u: nbrs[(i + 1) % len(nbrs)] for i, u in enumerate(nbrs)}
    for v, nbrs in rotation.items():
        for u in nbrs:
            if u not in succ or v not in succ[u]:
                raise ValueError(f"segment ({v}, {u}) has no reverse side")

    faces: list[FaceWalk] = []
    visited: set[Step] = set()
    for v in sorted(rotation):
        for u in rotation[v]:
            if (v, u) in visited:
                continue
            walk: list[Step] = []
            step = (v, u)
            while step not in visited:
                visited.add(step)
                walk.append(step)
                a, b = step
                step = (b, succ[b][a])
            faces.append(FaceWalk(tuple(walk)))
    return faces


# ---------------------------------------------------------------------------
# Drawings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Crossing:
    """Two independent edges meeting transversally at a dummy node."""

    edge_a: Edge
    edge_b: Edge
    dummy: int


@dataclass(frozen=True)
class Drawing:
    """A validated 1-planar drawing; construct through :func:`build_drawing`.

    Planarization node ids: original vertices keep their graph ids, the
    dummy of crossings[i] is graph.vertex_count + i.  Treat instances as
    immutable; every operation here is pure.
    """

    graph: BipartiteGraph
    crossings: tuple[Crossing, ...]
    rotation: dict[int, tuple[int, ...]]

    @property
    def node_count(self) -> int:
        return self.graph.vertex_count + len(self.crossings)

    @property
    def segment_count(self) -> int:
        return len(self.graph.edges) + 2 * len(self.crossings)

    def crossed_edges(self) -> dict[Edge, Crossing]:
        return {e: c for c in self.crossings for e in (c.edge_a, c.edge_b)}


def _normalize_crossings(graph: BipartiteGraph, crossings) -> tuple[Crossing, ...]:
    edge_set = set(graph.edges)
    n = graph.vertex_count
    out: list[Crossing] = []
    for i, item in enumerate(crossings):
        if isinstance(item, Crossing):
            ea, eb, dummy = item.edge_a, item.edge_b, item.dummy
            if dummy != n + i:
                raise DrawingError(
                    f"crossing {i} carries dummy id {dummy}, expected {n + i}"
                )
        else:
            ea, eb = item
            dummy = n + i
        ea = tuple(sorted(ea))
        eb = tuple(sorted(eb))
        if eb < ea:
            ea, eb = eb, ea
        for e in (ea, eb):
            if e not in edge_set:
                raise DrawingError(f"crossing {i} references missing edge {e}")
        if set(ea) & set(eb):
            raise AdjacentEdgesCross(f"edges {ea} and {eb} share an endpoint")
        out.append(Crossing(ea, eb, dummy))
    return tuple(out)


def _planarization_adjacency(
    graph: BipartiteGraph, crossings: Sequence[Crossing]
) -> dict[int, set[int]]:
    crossed: dict[Edge, int] = {}
    for c in crossings:
        for e in (c.edge_a, c.edge_b):
            if e in crossed:
                raise EdgeCrossedTwice(f"edge {e} appears in more than one crossing")
            crossed[e] = c.dummy
    adj: dict[int, set[int]] = {v: set() for v in range(graph.vertex_count)}
    for c in crossings:
        adj[c.dummy] = set()
    for e in graph.edges:
        u, v = e
        if e in crossed:
            d = crossed[e]
            adj[u].add(d)
            adj[d].add(u)
            adj[v].add(d)
            adj[d].add(v)
        else:
            adj[u].add(v)
            adj[v].add(u)
    return adj


def _validate_structure(
    graph: BipartiteGraph,
    crossings: Sequence[Crossing],
    rotation: Mapping[int, Sequence[int]],
) -> None:
    """Raise the first structural defect found, if any."""
    adj = _planarization_adjacency(graph, crossings)

    missing = set(adj) - set(rotation)
    extra = set(rotation) - set(adj)
    if missing or extra:
        raise IncompleteRotation(
            f"rotation nodes mismatch planarization (missing {sorted(missing)}, "
            f"extra {sorted(extra)})"
        )
    for v, nbrs in rotation.items():
        if len(set(nbrs)) != len(nbrs) or set(nbrs) != adj[v]:
            raise IncompleteRotation(
                f"rotation at node {v} lists {tuple(nbrs)}, expected a cyclic "
                f"order of {sorted(adj[v])}"
            )

    for c in crossings:
        order = rotation[c.dummy]
        if len(order) != 4:
            raise NonAlternatingDummy(f"dummy {c.dummy} has degree {len(order)}")
        a_slots = {i for i, v in enumerate(order) if v in c.edge_a}
        if a_slots not in ({0, 2}, {1, 3}):
            raise NonAlternatingDummy(
                f"dummy {c.dummy} rotation {order} does not alternate "
                f"{c.edge_a} with {c.edge_b}"
            )

    start = next(iter(adj))
    seen = {start}
    queue = [start]
    while queue:
        v = queue.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    if len(seen) != len(adj):
        raise DisconnectedPlanarization(
            f"planarization has {len(adj) - len(seen)} node(s) unreachable from {start}"
        )


def _euler_face_count(node_count: int, segment_count: int) -> int:
    return 2 - node_count + segment_count


def _canonical_rotation(nbrs: Sequence[int]) -> tuple[int, ...]:
    k = nbrs.index(min(nbrs))
    return tuple(nbrs[k:]) + tuple(nbrs[:k])


def build_drawing(graph: BipartiteGraph, crossings, rotation) -> Drawing:
    """Validate and assemble a Drawing.

    ``crossings`` may hold Crossing values or plain (edge, edge) pairs;
    dummies are numbered graph.vertex_count + index.  Every rotation is
    normalized to start at its smallest neighbor id, so structurally
    equal drawings compare equal.  Raises a DrawingError subclass on any
    violated invariant, including a genus check via face tracing.
    """
    cross = _normalize_crossings(graph, crossings)
    _validate_structure(graph, cross, rotation)
    norm = {v: _canonical_rotation(tuple(nbrs)) for v, nbrs in rotation.items()}
    d = Drawing(graph, cross, norm)
    faces = rotation_faces(norm)
    expected = _euler_face_count(d.node_count, d.segment_count)
    if len(faces) != expected:
        raise NotPlanarEmbedding(
            f"face tracing found {len(faces)} faces, Euler's formula needs {expected}"
        )
    return d


def trace_faces(d: Drawing) -> list[FaceWalk]:
    """All face walks of the drawing; raises NotPlanarEmbedding on genus > 0."""
    faces = rotation_faces(d.rotation)
    expected = _euler_face_count(d.node_count, d.segment_count)
    if len(faces) != expected:
        raise NotPlanarEmbedding(
            f"face tracing found {len(faces)} faces, Euler's formula needs {expected}"
        )
    return faces


def verification_failure(d: Drawing) -> str | None:
    """Reason the drawing fails 1-planar verification, or None if it passes.

    Re-checks everything from the raw fields, so it also catches objects
    assembled or mutated outside build_drawing.
    """
    try:
        n = d.graph.vertex_count
        for i, c in enumerate(d.crossings):
            if c.dummy != n + i:
                raise DrawingError(f"crossing {i} has dummy id {c.dummy}, expected {n + i}")
            if set(c.edge_a) & set(c.edge_b):
                raise AdjacentEdgesCross(f"edges {c.edge_a} and {c.edge_b} share an endpoint")
            for e in (c.edge_a, c.edge_b):
                if e not in set(d.graph.edges):
                    raise DrawingError(f"crossing {i} references missing edge {e}")
        _validate_structure(d.graph, d.crossings, d.rotation)
        trace_faces(d)
    except (DrawingError, ValueError) as err:
        return f"{type(err).__name__}: {err}"
    return None


def verify_one_planar(d: Drawing) -> bool:
    """True iff the drawing is a valid connected 1-planar sphere drawing."""
    return verification_failure(d) is None


def find_one_disk_face(d: Drawing) -> FaceWalk | None:
    """First traced face incident to every X vertex, if one exists.

    A drawing can be redrawn with any chosen face as the unbounded one,
    so such a face is exactly what lets all X vertices sit on a circle
    with the rest of the drawing inside.
    """
    xs = range(d.graph.x_count)
    for walk in trace_faces(d):
        if walk.visits_all(xs):
            return walk
    return None


def crossing_count(d: Drawing) -> int:
    """|crossings|."""
    return len(d.crossings)
