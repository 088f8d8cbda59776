"""Seeded instance generators and the named example families.

All randomness comes from :class:`facehit.rng.SplitMix64`, so a given
``(generator, parameters, seed)`` always yields the same PLG bytes.
"""

from __future__ import annotations

import enum

from .errors import BadParameter
from .plane_core import (
    ROOT,
    PlaneMultigraph,
    disjoint_union,
    from_oriented_faces,
    orient_triangles,
)
from .rng import SplitMix64


class Family(enum.Enum):
    EDGES = "edges"
    PATHS_3EDGE = "paths"
    CYCLES_4 = "cycles"


# -- fixed small graphs ---------------------------------------------------------


def triangle() -> PlaneMultigraph:
    return from_oriented_faces([(0, 1, 2), (0, 2, 1)])


def cycle(k: int) -> PlaneMultigraph:
    if k < 3:
        raise BadParameter("cycle needs k >= 3")
    ring = list(range(k))
    return from_oriented_faces([ring, ring[::-1]])


def k4() -> PlaneMultigraph:
    return from_oriented_faces(orient_triangles([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]))


def octahedron() -> PlaneMultigraph:
    # antipodal pairs: (0,1), (2,3), (4,5)
    tris = [(0, 2, 4), (0, 4, 3), (0, 3, 5), (0, 5, 2),
            (1, 2, 5), (1, 5, 3), (1, 3, 4), (1, 4, 2)]
    return from_oriented_faces(orient_triangles(tris))


def icosahedron() -> PlaneMultigraph:
    # 0 on top, 1..5 upper ring, 6..10 lower ring, 11 at the bottom
    tris = []
    for i in range(5):
        a, b = 1 + i, 1 + (i + 1) % 5
        c, d = 6 + i, 6 + (i + 1) % 5
        tris += [(0, a, b), (a, c, b), (b, c, d), (11, d, c)]
    return from_oriented_faces(orient_triangles(tris))


def single_edge() -> PlaneMultigraph:
    return PlaneMultigraph([0, 1], {0: (0, 1)}, {0: [0], 1: [1]})


def path(k_edges: int) -> PlaneMultigraph:
    verts = list(range(k_edges + 1))
    edges = {i: (i, i + 1) for i in range(k_edges)}
    rot: dict[int, list[int]] = {v: [] for v in verts}
    for i in range(k_edges):
        rot[i].append(2 * i)
        rot[i + 1].insert(0, 2 * i + 1)
    return PlaneMultigraph(verts, edges, rot)


def digon() -> PlaneMultigraph:
    # two parallel edges: faces 0 and 1 are both 2-faces
    return PlaneMultigraph([0, 1], {0: (0, 1), 1: (0, 1)}, {0: [0, 2], 1: [1, 3]})


def doubled(G: PlaneMultigraph) -> PlaneMultigraph:
    """Replace every edge of ``G`` by a parallel pair bounding a 2-face."""
    edges, rot = {}, {v: [] for v in G.vertices}
    for e, (u, w) in G.edges.items():
        edges[2 * e] = (u, w)
        edges[2 * e + 1] = (u, w)
    for v in G.vertices:
        for d in G.rotation[v]:
            e, side = d >> 1, d & 1
            first, second = 2 * (2 * e), 2 * (2 * e + 1)
            if side == 0:
                rot[v] += [second, first]
            else:
                rot[v] += [first + 1, second + 1]
    return PlaneMultigraph(G.vertices, edges, rot)


def doubled_k4() -> PlaneMultigraph:
    """K4 with every edge doubled; a triangle, not a 2-face, faces outward."""
    G = doubled(k4())
    tri = next(i for i, w in enumerate(G.local_faces(0)) if len(w.darts) == 3)
    return PlaneMultigraph(G.vertices, G.edges, G.rotation, {0: ROOT}, {0: tri})


# -- families ------------------------------------------------------------------------


def disjoint_family(kind: Family | str, k: int) -> PlaneMultigraph:
    """``k`` disjoint copies side by side in the outer face."""
    if k < 1:
        raise BadParameter("k must be >= 1")
    kind = Family(kind)
    part = {Family.EDGES: single_edge, Family.PATHS_3EDGE: lambda: path(3),
            Family.CYCLES_4: lambda: cycle(4)}[kind]()
    return disjoint_union([part] * k, [None] * k)


def doubled_k4_family(k: int) -> PlaneMultigraph:
    if k < 1:
        raise BadParameter("k must be >= 1")
    return disjoint_union([doubled_k4()] * k, [None] * k)


def loop_gadget() -> PlaneMultigraph:
    """Vertex 0 with three self-loops and a pendant in each former 1-face.

    Loops 0 and 1 bound disjoint discs inside loop 2.  The face between the
    three loops has length 3 and boundary vertex set ``{0}``.
    """
    l1, l2, l3, e1, e2, e3 = range(6)
    edges = {l1: (0, 0), l2: (0, 0), l3: (0, 0), e1: (0, 1), e2: (0, 2), e3: (0, 3)}

    def p(e):
        return 2 * e

    def m(e):
        return 2 * e + 1

    rot0 = [m(l1), p(e1), p(l1), m(l2), p(e2), p(l2), p(l3), p(e3), m(l3)]
    return PlaneMultigraph([0, 1, 2, 3], edges,
                           {0: rot0, 1: [m(e1)], 2: [m(e2)], 3: [m(e3)]})


# -- random instances ------------------------------------------------------------------


def stacked_triangulation(n: int, seed: int) -> PlaneMultigraph:
    """Random simple plane triangulation on ``n`` vertices.

    Start from triangle 0-1-2, insert vertex ``k`` into a uniformly chosen
    face for ``k = 3..n-1``, then attempt ``n`` random diagonal flips,
    skipping any flip that would create a parallel edge.
    """
    if n < 3:
        raise BadParameter("stacked_triangulation needs n >= 3")
    rng = SplitMix64(seed)
    faces: list[tuple[int, int, int]] = [(0, 1, 2), (0, 2, 1)]
    for x in range(3, n):
        i = rng.below(len(faces))
        a, b, c = faces[i]
        faces[i] = (a, b, x)
        faces += [(b, c, x), (c, a, x)]

    third: dict[tuple[int, int], int] = {}
    where: dict[tuple[int, int], int] = {}
    for i, (a, b, c) in enumerate(faces):
        for u, w, z in ((a, b, c), (b, c, a), (c, a, b)):
            third[(u, w)] = z
            where[(u, w)] = i
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, w in third:
        adj[u].add(w)
    edge_list = sorted({(min(u, w), max(u, w)) for (u, w) in third})

    for _ in range(n):
        j = rng.below(len(edge_list))
        a, b = edge_list[j]
        c, d = third[(a, b)], third[(b, a)]
        if c == d or d in adj[c]:
            continue
        fi, fj = where[(a, b)], where[(b, a)]
        for key in ((a, b), (b, c), (c, a), (b, a), (a, d), (d, b)):
            del third[key]
            del where[key]
        faces[fi] = (c, a, d)
        faces[fj] = (d, b, c)
        for i in (fi, fj):
            x, y, z = faces[i]
            for u, w, t in ((x, y, z), (y, z, x), (z, x, y)):
                third[(u, w)] = t
                where[(u, w)] = i
        adj[a].discard(b)
        adj[b].discard(a)
        adj[c].add(d)
        adj[d].add(c)
        edge_list[j] = (min(c, d), max(c, d))
    return from_oriented_faces(faces)


def kleetope(T: PlaneMultigraph) -> PlaneMultigraph:
    """Stellate every face of a connected triangulation.

    The added face vertices are pairwise non-adjacent, so the result has an
    independent set of ``2k - 4`` vertices out of ``3k - 4``.
    """
    faces = []
    x = max(T.vertices) + 1
    for f in T.faces:
        (walk,) = f.walks
        a, b, c = walk.vertices
        faces += [(a, b, x), (b, c, x), (c, a, x)]
        x += 1
    return from_oriented_faces(faces)


class _Builder:
    """Mutable rotation system used while growing a random instance."""

    def __init__(self, G: PlaneMultigraph):
        self.vertices = list(G.vertices)
        self.edges = dict(G.edges)
        self.rot = {v: list(G.rotation[v]) for v in G.vertices}
        self.next_eid = max(self.edges, default=-1) + 1

    def head(self, d):
        return self.edges[d >> 1][1 - (d & 1)]

    def succ(self, d):
        r = self.rot[self.head(d)]
        return r[(r.index(d ^ 1) + 1) % len(r)]

    def same_face(self, d: int) -> bool:
        x = self.succ(d)
        while x != d:
            if x == d ^ 1:
                return True
            x = self.succ(x)
        return False

    def delete_edge(self, e: int) -> None:
        u, w = self.edges.pop(e)
        self.rot[u].remove(2 * e)
        self.rot[w].remove(2 * e + 1)

    def attach_pendant(self, v: int, slot: int) -> None:
        x = max(self.vertices) + 1
        e = self.next_eid
        self.next_eid += 1
        self.vertices.append(x)
        self.edges[e] = (v, x)
        self.rot[v].insert(slot, 2 * e)
        self.rot[x] = [2 * e + 1]

    def graph(self) -> PlaneMultigraph:
        # renumber edges densely in their current order
        order = list(self.edges)
        emap = {e: i for i, e in enumerate(order)}
        edges = {emap[e]: self.edges[e] for e in order}
        rot = {v: [2 * emap[d >> 1] + (d & 1) for d in self.rot[v]] for v in self.vertices}
        return PlaneMultigraph(self.vertices, edges, rot)


def _nested_edge_in_digon() -> PlaneMultigraph:
    return disjoint_union([digon(), single_edge()], [None, (0, 0, 1)])


_GADGETS = (
    (2, single_edge),
    (3, triangle),
    (4, lambda: path(3)),
    (4, lambda: cycle(4)),
    (4, _nested_edge_in_digon),
)


def random_theorem_instance(n: int, seed: int) -> PlaneMultigraph:
    """Random plane multigraph with no isolated vertex, self-loop or 2-face.

    A stacked triangulation loses a random set of non-bridge edges, grows
    pendant vertices, and receives small extra components nested in random
    faces (including a digon whose inner face holds an edge).  The result
    has exactly ``n`` vertices.
    """
    if n < 2:
        raise BadParameter("random_theorem_instance needs n >= 2")
    if n == 2:
        return single_edge()
    rng = SplitMix64(seed)
    extras = rng.below(n // 4 + 1) if n >= 8 else 0
    n_base = n - extras
    B = _Builder(stacked_triangulation(n_base, rng.next_u64()))

    m = len(B.edges)
    deletions = rng.below(m - n_base + 2)
    for _ in range(3 * deletions):
        if deletions == 0:
            break
        ids = sorted(B.edges)
        e = ids[rng.below(len(ids))]
        if B.same_face(2 * e):
            continue
        B.delete_edge(e)
        deletions -= 1

    gadgets = []
    budget = extras
    while budget > 0:
        options = [g for g in _GADGETS if g[0] <= budget]
        if rng.below(3) == 0 or not options[1:]:
            v = B.vertices[rng.below(len(B.vertices))]
            B.attach_pendant(v, rng.below(len(B.rot[v]) + 1) if B.rot[v] else 0)
            budget -= 1
        else:
            size, make = options[rng.below(len(options))]
            gadgets.append(make())
            budget -= size
    main = B.graph()
    if not gadgets:
        return main

    parts = [main]
    placements = [None]
    for g in gadgets:
        host = rng.below(len(parts))
        P = parts[host]
        if rng.below(4) == 0:
            placements.append(None if host == 0 else (host, 0, 0))
        else:
            c = 0
            f = rng.below(len(P.local_faces(c)))
            placements.append((host, c, f))
        parts.append(g)
    return disjoint_union(parts, placements)


def corpus() -> list[tuple[str, PlaneMultigraph]]:
    """Named instances shared by the test and acceptance suites."""
    items: list[tuple[str, PlaneMultigraph]] = [
        ("edge", single_edge()),
        ("triangle", triangle()),
        ("c4", cycle(4)),
        ("c5", cycle(5)),
        ("c6", cycle(6)),
        ("k4", k4()),
        ("octahedron", octahedron()),
        ("icosahedron", icosahedron()),
        ("edges-5", disjoint_family(Family.EDGES, 5)),
        ("paths-2", disjoint_family(Family.PATHS_3EDGE, 2)),
        ("cycles-2", disjoint_family(Family.CYCLES_4, 2)),
        ("doubled-k4", doubled_k4_family(1)),
        ("doubled-k4-2", doubled_k4_family(2)),
        ("loop-gadget", loop_gadget()),
        ("nested-triangles", disjoint_union([triangle(), triangle()], [None, (0, 0, 1)])),
        ("digon-edge", _nested_edge_in_digon()),
    ]
    for n in (5, 6, 8, 10, 12, 15, 20, 30, 50):
        for seed in (1, 2, 3):
            items.append((f"tri-{n}-{seed}", stacked_triangulation(n, seed)))
    items += [("kleetope-k4", kleetope(k4())), ("kleetope-octahedron", kleetope(octahedron())),
              ("kleetope-tri-10", kleetope(stacked_triangulation(10, 5)))]
    for n in range(3, 13):
        for seed in (11, 12, 13, 14):
            items.append((f"thm-{n}-{seed}", random_theorem_instance(n, seed)))
    for n in (25, 40, 60):
        for seed in (21, 22):
            items.append((f"thm-{n}-{seed}", random_theorem_instance(n, seed)))
    return items
