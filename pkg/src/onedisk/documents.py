"""JSON documents for graphs and drawings.

Graph document keys:
    schema    "onedisk-graph/1"
    x_count   int
    y_count   int
    edges     list of [x_vertex, y_vertex]

Drawing document keys:
    schema         "onedisk-drawing/1"
    graph          embedded graph document
    crossings      list of [edge_index, edge_index] into graph.edges
    rotation       {"node_id": [neighbor ids...]} over all planarization
                   nodes; the dummy of crossings[i] is vertex_count + i
    one_disk_face  index of a face incident to all X vertices in face
                   tracing order, or null

Loading always re-runs full drawing validation; a well-formed file whose
content breaks an invariant raises ValidationError, never a half-built
object.  Malformed files raise ParseError.
"""

from __future__ import annotations

import json
from pathlib import Path

from .drawing import Drawing, DrawingError, build_drawing, find_one_disk_face, trace_faces
from .graph import BipartiteGraph, GraphError, new_bipartite

GRAPH_SCHEMA = "onedisk-graph/1"
DRAWING_SCHEMA = "onedisk-drawing/1"


class ParseError(ValueError):
    """Malformed document text or schema."""


class ValidationError(ValueError):
    """Well-formed document describing an invalid graph or drawing."""


def graph_to_document(g: BipartiteGraph) -> dict:
    return {
        "schema": GRAPH_SCHEMA,
        "x_count": g.x_count,
        "y_count": g.y_count,
        "edges": [list(e) for e in g.edges],
    }


def _require(doc: dict, key: str, kind) -> object:
    if key not in doc:
        raise ParseError(f"missing key {key!r}")
    value = doc[key]
    if not isinstance(value, kind):
        raise ParseError(f"key {key!r} must be {kind.__name__}, got {type(value).__name__}")
    return value


def graph_from_document(doc: dict) -> BipartiteGraph:
    if not isinstance(doc, dict):
        raise ParseError("graph document must be an object")
    if doc.get("schema") != GRAPH_SCHEMA:
        raise ParseError(f"expected schema {GRAPH_SCHEMA!r}, got {doc.get('schema')!r}")
    x_count = _require(doc, "x_count", int)
    y_count = _require(doc, "y_count", int)
    raw_edges = _require(doc, "edges", list)
    edges = []
    for item in raw_edges:
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(v, int) for v in item)):
            raise ParseError(f"edge entry {item!r} is not a pair of integers")
        edges.append((item[0], item[1]))
    try:
        return new_bipartite(x_count, y_count, edges)
    except GraphError as err:
        raise ValidationError(f"{type(err).__name__}: {err}") from err


def drawing_to_document(d: Drawing) -> dict:
    edge_index = {e: i for i, e in enumerate(d.graph.edges)}
    disk = find_one_disk_face(d)
    disk_index = None
    if disk is not None:
        disk_index = trace_faces(d).index(disk)
    return {
        "schema": DRAWING_SCHEMA,
        "graph": graph_to_document(d.graph),
        "crossings": [[edge_index[c.edge_a], edge_index[c.edge_b]] for c in d.crossings],
        "rotation": {str(v): list(nbrs) for v, nbrs in sorted(d.rotation.items())},
        "one_disk_face": disk_index,
    }


def drawing_from_document(doc: dict) -> Drawing:
    if not isinstance(doc, dict):
        raise ParseError("drawing document must be an object")
    if doc.get("schema") != DRAWING_SCHEMA:
        raise ParseError(f"expected schema {DRAWING_SCHEMA!r}, got {doc.get('schema')!r}")
    g = graph_from_document(_require(doc, "graph", dict))
    raw_crossings = _require(doc, "crossings", list)
    pairs = []
    for item in raw_crossings:
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(v, int) for v in item)):
            raise ParseError(f"crossing entry {item!r} is not a pair of edge indices")
        for idx in item:
            if not 0 <= idx < len(g.edges):
                raise ParseError(f"crossing references edge index {idx} out of range")
        pairs.append((g.edges[item[0]], g.edges[item[1]]))
    raw_rotation = _require(doc, "rotation", dict)
    rotation: dict[int, tuple[int, ...]] = {}
    for key, nbrs in raw_rotation.items():
        try:
            node = int(key)
        except ValueError:
            raise ParseError(f"rotation key {key!r} is not an integer") from None
        if not (isinstance(nbrs, list) and all(isinstance(v, int) for v in nbrs)):
            raise ParseError(f"rotation at {key} is not a list of node ids")
        rotation[node] = tuple(nbrs)
    try:
        d = build_drawing(g, pairs, rotation)
    except (DrawingError, GraphError) as err:
        raise ValidationError(f"{type(err).__name__}: {err}") from err
    disk_index = doc.get("one_disk_face")
    if disk_index is not None:
        if not isinstance(disk_index, int):
            raise ParseError("one_disk_face must be an integer or null")
        faces = trace_faces(d)
        if not 0 <= disk_index < len(faces):
            raise ValidationError(f"one_disk_face index {disk_index} out of range")
        if not faces[disk_index].visits_all(range(g.x_count)):
            raise ValidationError(
                f"face {disk_index} is not incident to every X vertex"
            )
    return d


def _dump(doc: dict, path) -> None:
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def _load(path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise ParseError(f"cannot read {path}: {err}") from err
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"invalid JSON in {path}: {err}") from err
    if not isinstance(doc, dict):
        raise ParseError(f"top level of {path} must be an object")
    return doc


def save_graph(g: BipartiteGraph, path) -> None:
    _dump(graph_to_document(g), path)


def load_graph(path) -> BipartiteGraph:
    return graph_from_document(_load(path))


def save_drawing(d: Drawing, path) -> None:
    _dump(drawing_to_document(d), path)


def load_drawing(path) -> Drawing:
    return drawing_from_document(_load(path))
