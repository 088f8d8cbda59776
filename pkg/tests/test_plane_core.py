import pytest
from hypothesis import given

from facehit import generators as gen
from facehit.errors import InvalidEmbedding, ParseError, UnknownVertex
from facehit.plane_core import (
    ROOT,
    PlaneMultigraph,
    check_embedding,
    delete_edges,
    delete_vertices,
    disjoint_union,
    dumps,
    loads,
    parse,
    twin,
)

from .strategies import theorem_instances

TRIANGLE = """plg 1
v 0
v 1
v 2
e 0 0 1
e 1 1 2
e 2 2 0
rot 0 0+ 2-
rot 1 1+ 0-
rot 2 2+ 1-
anchor 0 root
"""


def test_triangle_parses():
    G = loads(TRIANGLE)
    assert (G.n, G.m, len(G.darts())) == (3, 3, 6)
    assert sorted(f.length for f in G.faces) == [3, 3]
    assert G.is_connected()


def test_twin_is_involution():
    for d in range(20):
        assert twin(twin(d)) == d and twin(d) != d


def test_round_trip_is_byte_identical():
    G = loads(TRIANGLE)
    assert dumps(loads(dumps(G))) == dumps(G)


@pytest.mark.parametrize("text, needle", [
    ("plg 2\n", "plg 1"),
    ("plg 1\nv 0\nv 0\n", "declared twice"),
    ("plg 1\nv 0\ne 0 0 1\n", "undeclared vertex 1"),
    ("plg 1\nv 0\nv 1\ne 0 0 1\nrot 0 0*\n", "bad dart"),
    ("plg 1\nfoo 3\n", "unknown keyword"),
    ("plg 1\nv 0\nanchor 0 under 1\n", "malformed anchor"),
])
def test_parse_errors(text, needle):
    with pytest.raises(ParseError, match=needle):
        parse(text)


def test_rotation_typo_names_vertex():
    bad = TRIANGLE.replace("rot 1 1+ 0-", "rot 1 1+ 2-")
    with pytest.raises(InvalidEmbedding, match="vertex 1"):
        loads(bad)


def test_euler_violation_reports_counts():
    # swapping two darts at a degree-3 vertex of K4 gives a torus embedding
    K = gen.k4()
    rot = {v: list(K.rotation[v]) for v in K.vertices}
    rot[0] = [rot[0][0], rot[0][2], rot[0][1]]
    checks = check_embedding(K.vertices, K.edges, rot)
    euler = [c for c in checks if c.name.startswith("euler")]
    assert euler and not euler[0].ok
    assert "v-e+f = 4-6+2" in euler[0].detail


def test_unknown_vertex():
    G = loads(TRIANGLE)
    with pytest.raises(UnknownVertex):
        G.degree(9)


def test_isolated_vertex_walk():
    G = PlaneMultigraph([0, 1, 2], {0: (0, 1)}, {0: [0], 1: [1]})
    assert G.isolated_vertices() == [2]
    (f,) = G.faces
    assert f.length == 2 and f.boundary_vertices == {0, 1, 2}
    assert ((), (2,)) in [tuple(w) for w in f.walks]


def test_nested_triangles_middle_face():
    G = disjoint_union([gen.triangle(), gen.triangle()], [None, (0, 0, 1)])
    lengths = sorted(f.length for f in G.faces)
    assert lengths == [3, 3, 6]
    middle = next(f for f in G.faces if f.length == 6)
    assert len(middle.walks) == 2 and len(middle.boundary_vertices) == 6


def test_delete_outer_vertex_reanchors_inner_component():
    G = disjoint_union([gen.triangle(), gen.triangle()], [None, (0, 0, 1)])
    H = delete_vertices(G, [0])
    assert len(H.components) == 2
    assert H.anchors[1] is ROOT
    # the surviving edge (walk of 2) and the inner triangle share the root face
    assert sorted(f.length for f in H.faces) == [3, 5]


def test_octahedron_minus_antipodes_is_four_cycle():
    H = delete_vertices(gen.octahedron(), [0, 1])
    assert sorted(f.length for f in H.faces) == [4, 4]


def test_delete_edge_merges_faces():
    H = delete_edges(gen.k4(), [0])
    assert sorted(f.length for f in H.faces) == [3, 3, 4]


def test_loop_gadget_census():
    G = gen.loop_gadget()
    assert all(f.length >= 3 for f in G.faces)
    assert any(f.boundary_vertices == {0} and f.length == 3 for f in G.faces)


def test_nesting_cycle_rejected():
    T = gen.triangle()
    verts = [0, 1, 2, 3, 4, 5]
    edges = dict(T.edges)
    rot = {v: list(T.rotation[v]) for v in T.vertices}
    for e, (u, w) in T.edges.items():
        edges[e + 3] = (u + 3, w + 3)
    for v in T.vertices:
        rot[v + 3] = [d + 6 for d in T.rotation[v]]
    with pytest.raises(InvalidEmbedding, match="nesting"):
        PlaneMultigraph(verts, edges, rot, {0: (1, 0), 1: (0, 1)})


@given(theorem_instances())
def test_every_dart_on_exactly_one_walk(G):
    seen = [d for f in G.faces for w in f.walks for d in w.darts]
    assert sorted(seen) == sorted(G.darts())
    for f in G.faces:
        assert f.length == sum(len(w.darts) for w in f.walks)
        assert f.boundary_vertices == {v for w in f.walks for v in w.vertices}


@given(theorem_instances())
def test_plg_round_trip(G):
    text = dumps(G)
    H = loads(text)
    assert dumps(H) == text
    assert sorted(f.length for f in H.faces) == sorted(f.length for f in G.faces)


@given(theorem_instances(25))
def test_restrict_to_components_keeps_faces_valid(G):
    for c in range(len(G.components)):
        H = G.component_graph(c)
        assert H.is_connected()
        assert H.n == len(G.components[c])
