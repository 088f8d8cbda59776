import pytest
from hypothesis import given

from facehit import domatic_poly as dp
from facehit import generators as gen
from facehit.errors import PreconditionViolated
from facehit.plane_core import ROOT, PlaneMultigraph, delete_edges, disjoint_union
from facehit.verify import Side, audit_two_coloring, is_dominating, is_face_hitting

from .strategies import theorem_instances, triangulations

A, B = Side.A, Side.B


def star(k):
    verts = list(range(k + 1))
    edges = {i: (0, i + 1) for i in range(k)}
    rot = {0: [2 * i for i in range(k)], **{i + 1: [2 * i + 1] for i in range(k)}}
    return PlaneMultigraph(verts, edges, rot)


def test_trim_star():
    core, rec = dp.trim(star(4))
    assert core.vertices == (0,) and len(rec) == 4
    assert [p for p, _, _ in rec] == [1, 2, 3, 4]


def test_trim_cycle_unchanged():
    core, rec = dp.trim(gen.cycle(5))
    assert core.n == 5 and len(rec) == 0


def test_trim_triangle_with_pendant_path():
    # triangle 0,1,2 with path 2-3-4
    T = gen.triangle()
    edges = dict(T.edges)
    edges[3] = (2, 3)
    edges[4] = (3, 4)
    rot = {v: list(T.rotation[v]) for v in T.vertices}
    rot[2].append(6)
    rot[3] = [7, 8]
    rot[4] = [9]
    G = PlaneMultigraph([0, 1, 2, 3, 4], edges, rot)
    core, rec = dp.trim(G)
    assert core.n == 3 and [p for p, _, _ in rec] == [4, 3]


def test_trim_keeps_component_count():
    G = gen.disjoint_family("paths", 3)
    core, _ = dp.trim(G)
    assert len(core.components) == 3 and core.n == 3


def _ok(G, c, three_plus=False):
    a = audit_two_coloring(G, c)
    return a.domatic and (a.polychromatic_3plus if three_plus else a.polychromatic)


@pytest.mark.parametrize("G", [gen.triangle(), gen.cycle(4), gen.octahedron(),
                               gen.stacked_triangulation(50, 8)])
def test_lemma_examples(G):
    assert _ok(G, dp.lemma_coloring(G))


def test_lemma_on_doubled_k4_is_3plus_only():
    G = gen.doubled_k4()
    assert _ok(G, dp.lemma_coloring(G), three_plus=True)


def test_theorem_equals_lemma_without_pendants():
    G = gen.stacked_triangulation(20, 4)
    assert dp.theorem_coloring(G) == dp.lemma_coloring(G)


@pytest.mark.parametrize("G, reason", [
    (gen.loop_gadget(), "self-loop"),
    (gen.doubled_k4_family(1), "2-face"),
    (PlaneMultigraph([0, 1, 2], {0: (0, 1)}, {0: [0], 1: [1]}), "isolated-vertex"),
])
def test_preconditions_named(G, reason):
    with pytest.raises(PreconditionViolated) as exc:
        dp.theorem_coloring(G)
    assert exc.value.reason == reason and exc.value.where is not None


def test_partition_examples():
    V1, V2 = dp.theorem_partition(gen.cycle(4))
    assert {V1, V2} == {frozenset({0, 2}), frozenset({1, 3})}
    V1, V2 = dp.theorem_partition(gen.single_edge())
    assert {V1, V2} == {frozenset({0}), frozenset({1})}
    G = gen.disjoint_family("edges", 5)
    V1, V2 = dp.theorem_partition(G)
    assert len(V1) == len(V2) == 5


def nested_k4s():
    K = gen.k4()
    f = next(i for i, w in enumerate(K.local_faces(0)) if set(w.vertices) == {0, 1, 2})
    inner = PlaneMultigraph(K.vertices, K.edges, K.rotation, {0: ROOT}, {0: f})
    return disjoint_union([K, inner], [None, (0, 0, f)])


def test_repair_flips_nested_component():
    G = nested_k4s()
    col = {0: A, 1: A, 2: A, 3: B, 4: A, 5: A, 6: A, 7: B}
    assert not audit_two_coloring(G, col).polychromatic
    flipped = dp.repair_faces(G, col, debug=True)
    assert flipped == [1]
    assert [col[v] for v in (4, 5, 6, 7)] == [B, B, B, A]
    assert _ok(G, col)


def test_component_plans():
    core, _ = dp.trim(disjoint_union([gen.single_edge(), gen.cycle(4)], [None, None]))
    kinds = [p.kind for p in dp.component_plans(core)]
    assert kinds == [dp.Kind.TRIVIAL, dp.Kind.NONTRIVIAL]


@given(theorem_instances(40))
def test_theorem_property(G):
    c = dp.theorem_coloring(G, debug=True)
    assert _ok(G, c)
    V1, V2 = dp.theorem_partition(G)
    assert not V1 & V2 and V1 | V2 == set(G.vertices)
    for S in (V1, V2):
        assert is_dominating(G, S) and is_face_hitting(G, S)
    assert min(len(V1), len(V2)) <= G.n // 2


@given(triangulations(20))
def test_triangulation_minus_matching_like_deletions(T):
    # dropping one edge per vertex pair where both ends keep degree >= 3
    drop, used = [], set()
    for e, (u, w) in sorted(T.edges.items()):
        if u not in used and w not in used and T.degree(u) > 3 and T.degree(w) > 3:
            drop.append(e)
            used |= {u, w}
    G = delete_edges(T, drop)
    assert _ok(G, dp.theorem_coloring(G))
