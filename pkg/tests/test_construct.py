from __future__ import annotations

import pytest

import onedisk as od
from onedisk.construct import DrawingBuilder
from onedisk.drawing import rotation_faces

from conftest import no_disk_k33_drawing, planar_k22_drawing


# ---------------------------------------------------------------------------
# Maximal outerplanar scaffolds
# ---------------------------------------------------------------------------


def test_skeleton_k3_is_triangle():
    s = od.maximal_outerplanar(3)
    assert len(s.edges) == 3
    assert len(s.triangles) == 1
    assert len(s.outer_face) == 3


def test_skeleton_k5_fan():
    s = od.maximal_outerplanar(5, "fan")
    assert len(s.edges) == 7
    assert len(s.triangles) == 3
    assert set(s.edges) >= {(0, 2), (0, 3)}


def test_skeleton_k4_counts_all_strategies():
    for strategy in ("fan", "zigzag", "seed:1"):
        s = od.maximal_outerplanar(4, strategy)
        assert len(s.edges) == 5
        assert len(s.triangles) == 2


def test_skeleton_counts_strategy_independent():
    for k in range(3, 10):
        for strategy in ("fan", "zigzag", "seed:0", "seed:99"):
            s = od.maximal_outerplanar(k, strategy)
            assert len(s.edges) == 2 * k - 3
            assert len(s.triangles) == k - 2
            assert all(len(t) == 3 for t in s.triangles)
            assert s.outer_face.visits_all(range(k))


def test_skeleton_zigzag_differs_from_fan():
    fan = od.maximal_outerplanar(6, "fan")
    zig = od.maximal_outerplanar(6, "zigzag")
    assert set(fan.edges) != set(zig.edges)


def test_seeded_skeleton_deterministic():
    a = od.maximal_outerplanar(8, "seed:42")
    b = od.maximal_outerplanar(8, "seed:42")
    assert a.edges == b.edges


def test_k_too_small():
    with pytest.raises(od.KTooSmall):
        od.maximal_outerplanar(2)


def test_unknown_strategy():
    with pytest.raises(ValueError):
        od.maximal_outerplanar(5, "spiral")


# ---------------------------------------------------------------------------
# Gadget insertion
# ---------------------------------------------------------------------------


def test_insert_b3_fragment_counts_and_euler():
    s = od.maximal_outerplanar(3)
    builder = DrawingBuilder(s)
    pattern = od.insert_b3(builder, s.triangles[0])
    assert len(pattern.interior) == 3
    assert len(pattern.crossings) == 3
    # Fragment including the scaffold: 6 original nodes + 3 dummies,
    # 3 + 9 edges -> 18 segments, so Euler needs 11 faces.
    rotation = builder.derive_rotation(include_scaffold=True)
    assert len(rotation) == 9
    faces = rotation_faces(rotation)
    assert len(faces) == 2 - 9 + 18 == 11


def test_insert_b3_all_triangles_k5():
    s = od.maximal_outerplanar(5, "fan")
    builder = DrawingBuilder(s)
    for tri in s.triangles:
        od.insert_b3(builder, tri)
    g, d = builder.finish()
    assert g.y_count == 9
    assert od.edge_count(g) == 27
    assert od.crossing_count(d) == 9
    assert od.verify_one_planar(d)


def test_insert_b3_rejects_outer_face():
    s = od.maximal_outerplanar(3)
    builder = DrawingBuilder(s)
    with pytest.raises(od.NotATriangle):
        od.insert_b3(builder, s.outer_face)


def test_insert_b3_rejects_reuse():
    s = od.maximal_outerplanar(4)
    builder = DrawingBuilder(s)
    od.insert_b3(builder, s.triangles[0])
    with pytest.raises(od.NotATriangle):
        od.insert_b3(builder, s.triangles[0])


def test_insert_b3_rejects_non_triangle_walk():
    s = od.maximal_outerplanar(5)
    builder = DrawingBuilder(s)
    with pytest.raises(od.NotATriangle):
        od.insert_b3(builder, s.outer_face)


# ---------------------------------------------------------------------------
# construct_extremal
# ---------------------------------------------------------------------------


def test_extremal_3_3_is_k33():
    g, d = od.construct_extremal(3, 3)
    assert od.edge_count(g) == 9
    assert od.crossing_count(d) == 3
    assert g.edges == tuple((i, j) for i in range(3) for j in range(3, 6))


def test_extremal_4_6():
    g, d = od.construct_extremal(4, 6)
    assert od.edge_count(g) == 18
    assert od.verify_one_planar(d)


def test_extremal_4_8_with_pendant_pair():
    g, d = od.construct_extremal(4, 8)
    assert od.edge_count(g) == 22
    degree_two = [v for v in g.y_vertices if g.degree(v) == 2]
    assert len(degree_two) == 2
    for v in degree_two:
        assert {u for u, w in g.edges if w == v} == {0, 1}


def test_extremal_2_5_nested():
    g, d = od.construct_extremal(2, 5)
    assert od.edge_count(g) == 10
    assert od.crossing_count(d) == 0
    assert all(g.degree(v) == 2 for v in g.y_vertices)


def test_extremal_edge_identity_across_regimes():
    cases = [(2, 2), (2, 9), (3, 3), (3, 7), (4, 6), (4, 11), (5, 9), (6, 12), (7, 20)]
    for x, y in cases:
        g, d = od.construct_extremal(x, y)
        assert od.edge_count(g) == 2 * (x + y) + x - 6, (x, y)
        assert od.verify_one_planar(d)
        assert od.find_one_disk_face(d) is not None


def test_extremal_gadget_degree_profile():
    for x, y in [(3, 3), (4, 6), (4, 9), (5, 12)]:
        g, _ = od.construct_extremal(x, y)
        degree_three = sum(1 for v in g.y_vertices if g.degree(v) == 3)
        degree_two = sum(1 for v in g.y_vertices if g.degree(v) == 2)
        assert degree_three == 3 * (x - 2)
        assert degree_two == y - 3 * (x - 2)


def test_extremal_deterministic():
    a = od.construct_extremal(5, 9)
    b = od.construct_extremal(5, 9)
    assert a == b


def test_uncovered_regime():
    with pytest.raises(od.UncoveredRegime):
        od.construct_extremal(4, 4)
    with pytest.raises(od.UncoveredRegime):
        od.construct_extremal(5, 8)


def test_extremal_domain_errors():
    with pytest.raises(ValueError):
        od.construct_extremal(1, 5)
    with pytest.raises(ValueError):
        od.construct_extremal(4, 3)


# ---------------------------------------------------------------------------
# Doubling
# ---------------------------------------------------------------------------


def test_double_planar_k22():
    result = od.double(planar_k22_drawing())
    assert result.graph_star.vertex_count == 6
    assert od.edge_count(result.graph_star) == 8
    assert od.crossing_count(result.drawing_star) == 0
    assert od.verify_one_planar(result.drawing_star)


def test_double_extremal_3_3():
    g, d = od.construct_extremal(3, 3)
    result = od.double(d)
    assert result.graph_star.vertex_count == 9
    assert od.edge_count(result.graph_star) == 18
    assert od.verify_one_planar(result.drawing_star)
    assert od.edge_count(result.graph_star) == od.huang_max_edges(3, 6)


def test_double_identities_on_grid():
    for x in range(3, 9):
        y = 3 * (x - 2)
        g, d = od.construct_extremal(x, y)
        result = od.double(d)
        assert result.graph_star.vertex_count == x + 2 * y
        assert od.edge_count(result.graph_star) == 2 * od.edge_count(g)
        assert od.edge_count(result.graph_star) == 6 * x + 4 * y - 12
        assert od.verify_one_planar(result.drawing_star)


def test_double_preserves_bipartiteness_and_parts():
    g, d = od.construct_extremal(4, 6)
    result = od.double(d)
    star = result.graph_star
    assert star.x_count == 4 and star.y_count == 12
    for u, v in star.edges:
        assert u < 4 <= v


def test_double_requires_disk_face():
    with pytest.raises(od.NoOneDiskFace):
        od.double(no_disk_k33_drawing())


def test_double_mirror_preserves_alternation():
    _, d = od.construct_extremal(3, 3)
    result = od.double(d)
    dd = result.drawing_star
    for c in dd.crossings:
        order = dd.rotation[c.dummy]
        slots = {i for i, v in enumerate(order) if v in c.edge_a}
        assert slots in ({0, 2}, {1, 3})
