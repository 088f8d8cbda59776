"""Dart-based plane multigraphs.

An edge ``e`` with endpoints ``(u, v)`` owns two darts: ``2*e`` runs from
``u`` to ``v`` (written ``e+``) and ``2*e + 1`` runs back (``e-``).  The
rotation at a vertex lists its outgoing darts counterclockwise.  The face
to the left of a dart ``d`` continues with the rotation successor of
``twin(d)`` at ``head(d)``.

A disconnected graph also needs to know where each component sits.  Every
connected component has a designated *outer* local face and an *anchor*:
either ``ROOT`` (the unbounded region) or a ``(component, local_face)``
pair naming the region of another component it lies in.  Global faces are
the classes of local faces glued by these anchors.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Sequence

from ..errors import InvalidEmbedding, UnknownVertex

ROOT = None

Anchor = tuple[int, int] | None


def twin(d: int) -> int:
    return d ^ 1


def dart_name(d: int) -> str:
    return f"{d >> 1}{'+' if d % 2 == 0 else '-'}"


class FaceWalk(NamedTuple):
    """One closed boundary walk.  An isolated vertex gives ``darts == ()``."""

    darts: tuple[int, ...]
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class GlobalFace:
    id: int
    walks: tuple[FaceWalk, ...]
    length: int
    boundary_vertices: frozenset
    members: tuple[tuple[int, int], ...]

    @property
    def is_outer(self) -> bool:
        return self.id == 0


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


class _Topology:
    """Components and local faces derived from a rotation system."""

    def __init__(self, vertices, edges, rotation):
        self.rot_next: dict[int, int] = {}
        self.rot_prev: dict[int, int] = {}
        for v in vertices:
            rot = rotation.get(v, ())
            k = len(rot)
            for i, d in enumerate(rot):
                self.rot_next[d] = rot[(i + 1) % k]
                self.rot_prev[d] = rot[i - 1]

        # components, numbered by first vertex in declaration order
        adj: dict[int, list[int]] = {v: [] for v in vertices}
        for u, w in edges.values():
            adj[u].append(w)
            adj[w].append(u)
        self.comp_of: dict[int, int] = {}
        self.components: list[tuple[int, ...]] = []
        order = {x: i for i, x in enumerate(vertices)}
        for v in vertices:
            if v in self.comp_of:
                continue
            c = len(self.components)
            self.comp_of[v] = c
            stack, seen = [v], [v]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in self.comp_of:
                        self.comp_of[y] = c
                        seen.append(y)
                        stack.append(y)
            self.components.append(tuple(sorted(seen, key=order.__getitem__)))

        comp_darts: list[list[int]] = [[] for _ in self.components]
        for e, (u, _) in edges.items():
            comp_darts[self.comp_of[u]].extend((2 * e, 2 * e + 1))

        self.local_faces: list[list[FaceWalk]] = []
        self.local_face_of: dict[int, tuple[int, int]] = {}
        self.comp_edges: list[int] = []
        for c, darts in enumerate(comp_darts):
            self.comp_edges.append(len(darts) // 2)
            faces: list[FaceWalk] = []
            if not darts:
                faces.append(FaceWalk((), (self.components[c][0],)))
            for start in sorted(darts):
                if start in self.local_face_of:
                    continue
                walk = []
                d = start
                while d not in self.local_face_of:
                    self.local_face_of[d] = (c, len(faces))
                    walk.append(d)
                    d = self.rot_next[d ^ 1]
                tails = tuple(_tail(edges, x) for x in walk)
                faces.append(FaceWalk(tuple(walk), tails))
            self.local_faces.append(faces)


def _tail(edges, d: int) -> int:
    return edges[d >> 1][d & 1]


def _head(edges, d: int) -> int:
    return edges[d >> 1][1 - (d & 1)]


def embedding_checks(vertices, edges, rotation, anchors=None, outer=None):
    """Run every structural check; return ``(checks, topology_or_None)``."""
    checks: list[Check] = []
    vset = set()
    dup = [v for v in vertices if v in vset or vset.add(v)]
    checks.append(Check("vertices", not dup, f"duplicate vertex {dup[0]}" if dup else ""))
    bad_edges = [e for e, (u, w) in edges.items() if u not in vset or w not in vset]
    checks.append(
        Check("edges", not bad_edges,
              f"edge {bad_edges[0]} has an undeclared endpoint" if bad_edges else "")
    )
    if dup or bad_edges:
        return checks, None

    problem = ""
    seen: dict[int, int] = {}
    for v in rotation:
        if v not in vset:
            problem = f"rotation given for undeclared vertex {v}"
            break
    if not problem:
        for v in vertices:
            for d in rotation.get(v, ()):
                if (d >> 1) not in edges:
                    problem = f"vertex {v}: unknown dart {dart_name(d)}"
                elif _tail(edges, d) != v:
                    problem = f"vertex {v}: dart {dart_name(d)} does not leave {v}"
                elif d in seen:
                    where = "twice" if seen[d] == v else f"also at vertex {seen[d]}"
                    problem = f"vertex {v}: dart {dart_name(d)} listed {where}"
                if problem:
                    break
                seen[d] = v
            if problem:
                break
    if not problem:
        for e, (u, w) in edges.items():
            for d, t in ((2 * e, u), (2 * e + 1, w)):
                if d not in seen:
                    problem = f"vertex {t}: rotation is missing dart {dart_name(d)}"
                    break
            if problem:
                break
    checks.append(Check("rotation", not problem, problem))
    if problem:
        return checks, None

    topo = _Topology(vertices, edges, rotation)
    ncomp = len(topo.components)

    anchors = dict(anchors or {})
    outer = dict(outer or {})
    problem = ""
    for c in list(anchors) + list(outer):
        if not (isinstance(c, int) and 0 <= c < ncomp):
            problem = f"anchor refers to unknown component {c}"
            break
    if not problem:
        for c, f in outer.items():
            if not 0 <= f < len(topo.local_faces[c]):
                problem = f"component {c}: outer face {f} out of range"
                break
    if not problem:
        for c, target in anchors.items():
            if target is ROOT:
                continue
            p, f = target
            if not (isinstance(p, int) and 0 <= p < ncomp):
                problem = f"component {c}: anchored in unknown component {p}"
            elif not 0 <= f < len(topo.local_faces[p]):
                problem = f"component {c}: component {p} has no local face {f}"
            elif p == c:
                problem = f"component {c}: anchored in itself"
            if problem:
                break
    if not problem:
        for c in range(ncomp):
            path = [c]
            x = c
            while anchors.get(x) is not ROOT:
                x = anchors[x][0]
                if x in path:
                    problem = f"nesting cycle through components {path + [x]}"
                    break
                path.append(x)
            if problem:
                break
    checks.append(Check("nesting", not problem, problem))

    for c, comp in enumerate(topo.components):
        nv, ne, nf = len(comp), topo.comp_edges[c], len(topo.local_faces[c])
        chi = nv - ne + nf
        checks.append(
            Check(f"euler[{c}]", chi == 2,
                  f"component {c}: v-e+f = {nv}-{ne}+{nf} = {chi}, expected 2")
        )
    return checks, topo


class PlaneMultigraph:
    """Immutable embedded multigraph.  See the module docstring for conventions."""

    def __init__(
        self,
        vertices: Iterable[int],
        edges: Mapping[int, tuple[int, int]],
        rotation: Mapping[int, Sequence[int]],
        anchors: Mapping[int, Anchor] | None = None,
        outer: Mapping[int, int] | None = None,
    ):
        vertices = tuple(vertices)
        edges = {int(e): (uv[0], uv[1]) for e, uv in edges.items()}
        rotation = {v: tuple(r) for v, r in rotation.items() if r}
        checks, topo = embedding_checks(vertices, edges, rotation, anchors, outer)
        for chk in checks:
            if not chk.ok:
                raise InvalidEmbedding(chk.detail)
        self._vertices = vertices
        self._vindex = {v: i for i, v in enumerate(vertices)}
        self._edges = edges
        self._rotation = {v: rotation.get(v, ()) for v in vertices}
        self._topo = topo
        ncomp = len(topo.components)
        anchors = anchors or {}
        outer = outer or {}
        self._anchors: dict[int, Anchor] = {c: anchors.get(c, ROOT) for c in range(ncomp)}
        self._outer: dict[int, int] = {c: outer.get(c, 0) for c in range(ncomp)}
        self._nbrs: dict[int, frozenset] = {}
        self._build_global_faces()

    # -- construction helpers -------------------------------------------------

    def _build_global_faces(self) -> None:
        topo = self._topo
        parent: dict = {}

        def find(x):
            while parent.get(x, x) != x:
                parent[x] = parent.get(parent[x], parent[x])
                x = parent[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb, key=_key)] = min(ra, rb, key=_key)

        for c in range(len(topo.components)):
            target = self._anchors[c]
            union((c, self._outer[c]), ("root",) if target is ROOT else tuple(target))

        classes: dict = {}
        for c, faces in enumerate(topo.local_faces):
            for i in range(len(faces)):
                classes.setdefault(find((c, i)), []).append((c, i))
        roots = sorted(classes, key=lambda r: (r != ("root",), _key(min(classes[r]))))
        self._faces: list[GlobalFace] = []
        self._face_of_local: dict[tuple[int, int], int] = {}
        for fid, r in enumerate(roots):
            members = tuple(sorted(classes[r]))
            walks = tuple(topo.local_faces[c][i] for c, i in members)
            for m in members:
                self._face_of_local[m] = fid
            verts = frozenset(v for w in walks for v in w.vertices)
            self._faces.append(
                GlobalFace(fid, walks, sum(len(w.darts) for w in walks), verts, members)
            )

    # -- basic accessors -----------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> Mapping[int, tuple[int, int]]:
        return MappingProxyType(self._edges)

    @property
    def rotation(self) -> Mapping[int, tuple[int, ...]]:
        return MappingProxyType(self._rotation)

    @property
    def anchors(self) -> Mapping[int, Anchor]:
        return MappingProxyType(self._anchors)

    @property
    def outer(self) -> Mapping[int, int]:
        return MappingProxyType(self._outer)

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def __contains__(self, v) -> bool:
        return v in self._vindex

    def __repr__(self) -> str:
        return (f"PlaneMultigraph(n={self.n}, m={self.m}, "
                f"components={len(self.components)}, faces={len(self._faces)})")

    def index(self, v: int) -> int:
        """Position of ``v`` in declaration order."""
        try:
            return self._vindex[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}") from None

    def tail(self, d: int) -> int:
        return _tail(self._edges, d)

    def head(self, d: int) -> int:
        return _head(self._edges, d)

    def darts_at(self, v: int) -> tuple[int, ...]:
        self.index(v)
        return self._rotation[v]

    def rot_next(self, d: int) -> int:
        return self._topo.rot_next[d]

    def rot_prev(self, d: int) -> int:
        return self._topo.rot_prev[d]

    def succ(self, d: int) -> int:
        """Next dart along the face to the left of ``d``."""
        return self._topo.rot_next[d ^ 1]

    def darts(self) -> list[int]:
        return [d for e in self._edges for d in (2 * e, 2 * e + 1)]

    def neighbors(self, v: int) -> frozenset:
        nb = self._nbrs.get(v)
        if nb is None:
            self.index(v)
            nb = frozenset(self.head(d) for d in self._rotation[v]) - {v}
            self._nbrs[v] = nb
        return nb

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def self_loops(self) -> list[int]:
        return [e for e, (u, w) in self._edges.items() if u == w]

    def has_self_loops(self) -> bool:
        return any(u == w for u, w in self._edges.values())

    def isolated_vertices(self) -> list[int]:
        return [v for v in self._vertices if not self._rotation[v]]

    # -- components and faces --------------------------------------------------

    @property
    def components(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self._topo.components)

    def component_of(self, v: int) -> int:
        self.index(v)
        return self._topo.comp_of[v]

    def component_edges(self, c: int) -> list[int]:
        comp = set(self._topo.components[c])
        return [e for e, (u, _) in self._edges.items() if u in comp]

    def is_connected(self) -> bool:
        return len(self._topo.components) <= 1

    def local_faces(self, c: int) -> tuple[FaceWalk, ...]:
        return tuple(self._topo.local_faces[c])

    def local_face_of(self, d: int) -> tuple[int, int]:
        return self._topo.local_face_of[d]

    @property
    def faces(self) -> tuple[GlobalFace, ...]:
        return tuple(self._faces)

    def face_of_local(self, c: int, i: int) -> int:
        return self._face_of_local[(c, i)]

    def face_of_dart(self, d: int) -> int:
        return self._face_of_local[self._topo.local_face_of[d]]

    def faces_at(self, v: int) -> set[int]:
        """Global faces whose boundary contains ``v``."""
        if not self._rotation[v]:
            c = self.component_of(v)
            return {self._face_of_local[(c, 0)]}
        return {self.face_of_dart(d) for d in self._rotation[v]}

    def children(self, c: int) -> list[int]:
        return [x for x, a in self._anchors.items() if a is not ROOT and a[0] == c]

    def subtree(self, c: int) -> list[int]:
        """``c`` and every component nested (transitively) inside it."""
        out, stack = [], [c]
        while stack:
            x = stack.pop()
            out.append(x)
            stack.extend(self.children(x))
        return sorted(out)

    def component_graph(self, c: int) -> "PlaneMultigraph":
        """Component ``c`` on its own, keeping its outer face designation."""
        keep = set(self._topo.components[c])
        return restrict(self, keep, set(self.component_edges(c)))


def _key(x):
    return (-1, -1) if x == ("root",) else x


def check_embedding(vertices, edges, rotation, anchors=None, outer=None) -> list[Check]:
    checks, _ = embedding_checks(tuple(vertices), dict(edges),
                                 {v: tuple(r) for v, r in rotation.items() if r},
                                 anchors, outer)
    return checks


# -- derived graphs ---------------------------------------------------------------


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        p = self.parent
        root = x
        while p.get(root, root) != root:
            root = p[root]
        while p.get(x, x) != root:
            p[x], x = root, p[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def restrict(G: PlaneMultigraph, keep_vertices: set, keep_edges: set) -> PlaneMultigraph:
    """Embedded subgraph on ``keep_vertices`` using ``keep_edges``.

    Rotations are filtered in place.  Nesting is recomputed so that every new
    component sits in the region of the old embedding it actually occupies.
    """
    keep_edges = {e for e in keep_edges
                  if G.edges[e][0] in keep_vertices and G.edges[e][1] in keep_vertices}
    vertices = [v for v in G.vertices if v in keep_vertices]
    edges = {e: uv for e, uv in G.edges.items() if e in keep_edges}
    rotation = {v: [d for d in G.rotation[v] if (d >> 1) in keep_edges] for v in vertices}
    topo = _Topology(vertices, edges, rotation)
    old = G._topo

    pieces_of: dict[int, list[int]] = {}
    for p, comp in enumerate(topo.components):
        pieces_of.setdefault(old.comp_of[comp[0]], []).append(p)

    def old_face_at(v: int) -> int:
        # an old local face of v's old component incident to v
        rot = G.rotation[v]
        return old.local_face_of[rot[0]][1] if rot else 0

    def old_face_of_piece(p: int) -> int:
        comp = topo.components[p]
        for v in comp:
            if rotation[v]:
                return old.local_face_of[rotation[v][0]][1]
        return old_face_at(comp[0])

    # region[p][g]: new local face of piece p containing old local face g
    region: dict[int, dict[int, int]] = {}
    for C, pieces in pieces_of.items():
        nfaces = len(old.local_faces[C])
        cedges = G.component_edges(C)
        for p in pieces:
            pdarts = [d for v in topo.components[p] for d in rotation[v]]
            if not pdarts:
                region[p] = {g: 0 for g in range(nfaces)}
                continue
            pedges = {d >> 1 for d in pdarts}
            uf = _UnionFind()
            for e in cedges:
                if e not in pedges:
                    uf.union(old.local_face_of[2 * e][1], old.local_face_of[2 * e + 1][1])
            cls_face: dict = {}
            for d in pdarts:
                cls_face[uf.find(old.local_face_of[d][1])] = topo.local_face_of[d][1]
            region[p] = {g: cls_face[uf.find(g)] for g in range(nfaces)}

    new_outer = {}
    for C, pieces in pieces_of.items():
        for p in pieces:
            new_outer[p] = region[p][G.outer[C]]

    def encloses(p: int, g: int) -> bool:
        return region[p][g] != new_outer[p]

    depth: dict[int, int] = {}
    for C, pieces in pieces_of.items():
        for p in pieces:
            g = old_face_of_piece(p)
            depth[p] = sum(1 for q in pieces if q != p and encloses(q, g))

    memo: dict = {}

    def resolve(target):
        if target is ROOT:
            return ROOT
        if target in memo:
            return memo[target]
        C, g = target
        enclosing = [p for p in pieces_of.get(C, []) if encloses(p, g)]
        if enclosing:
            p = max(enclosing, key=lambda q: (depth[q], -q))
            res = (p, region[p][g])
        else:
            res = resolve(G.anchors[C])
        memo[target] = res
        return res

    new_anchor = {}
    for C, pieces in pieces_of.items():
        for p in pieces:
            g = old_face_of_piece(p)
            enclosing = [q for q in pieces if q != p and encloses(q, g)]
            if enclosing:
                q = max(enclosing, key=lambda x: (depth[x], -x))
                new_anchor[p] = (q, region[q][g])
            else:
                new_anchor[p] = resolve(G.anchors[C])
    return PlaneMultigraph(vertices, edges, rotation, new_anchor, new_outer)


def delete_vertices(G: PlaneMultigraph, S: Iterable[int]) -> PlaneMultigraph:
    S = set(S)
    for v in S:
        G.index(v)
    keep = set(G.vertices) - S
    return restrict(G, keep, set(G.edges))


def delete_edges(G: PlaneMultigraph, E: Iterable[int]) -> PlaneMultigraph:
    E = set(E)
    unknown = E - set(G.edges)
    if unknown:
        raise KeyError(f"unknown edges {sorted(unknown)}")
    return restrict(G, set(G.vertices), set(G.edges) - E)


def trace_faces(G: PlaneMultigraph) -> tuple[GlobalFace, ...]:
    return G.faces


def degree(G: PlaneMultigraph, v: int) -> int:
    return G.degree(v)


def neighbors(G: PlaneMultigraph, v: int) -> frozenset:
    return G.neighbors(v)


def from_oriented_faces(faces: Sequence[Sequence[int]]) -> PlaneMultigraph:
    """Connected simple plane graph from consistently oriented face cycles.

    Each directed edge ``(a, b)`` must occur in exactly one face.  Edges are
    numbered in sorted order of their ``(min, max)`` endpoints.
    """
    nxt: dict[tuple[int, int], int] = {}
    verts: set[int] = set()
    for f in faces:
        k = len(f)
        for i in range(k):
            a, b, c = f[i], f[(i + 1) % k], f[(i + 2) % k]
            if (b, a) in nxt:
                raise InvalidEmbedding(f"directed edge {b}->{a} appears in two faces")
            # at b, the dart back to a is followed by the dart to c
            nxt[(b, a)] = c
            verts.add(a)
    pairs = sorted({(min(a, b), max(a, b)) for (a, b) in nxt})
    edges = {i: uv for i, uv in enumerate(pairs)}
    dart = {}
    for i, (u, w) in edges.items():
        dart[(u, w)] = 2 * i
        dart[(w, u)] = 2 * i + 1
    rotation = {}
    for v in sorted(verts):
        nb = [b for (a, b) in dart if a == v]
        start = min(nb)
        order = [start]
        x = nxt[(v, start)]
        while x != start:
            order.append(x)
            x = nxt[(v, x)]
        if len(order) != len(nb):
            raise InvalidEmbedding(f"vertex {v}: faces do not close up around it")
        rotation[v] = [dart[(v, b)] for b in order]
    return PlaneMultigraph(sorted(verts), edges, rotation)


def orient_triangles(triangles: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Orient an unoriented triangle list of a sphere triangulation consistently."""
    tris = [tuple(t) for t in triangles]
    by_edge: dict[frozenset, list[int]] = {}
    for i, t in enumerate(tris):
        for j in range(3):
            by_edge.setdefault(frozenset((t[j], t[(j + 1) % 3])), []).append(i)
    out: list = [None] * len(tris)
    out[0] = tris[0]
    stack = [0]
    while stack:
        i = stack.pop()
        t = out[i]
        for j in range(3):
            a, b = t[j], t[(j + 1) % 3]
            for k in by_edge[frozenset((a, b))]:
                if out[k] is None:
                    s = tris[k]
                    c = next(x for x in s if x not in (a, b))
                    out[k] = (b, a, c)
                    stack.append(k)
    return out


def disjoint_union(parts: Sequence[PlaneMultigraph],
                   placements: Sequence[tuple[int, int, int] | None]) -> PlaneMultigraph:
    """Place several graphs side by side.

    ``placements[i]`` is ``None`` (root components of part ``i`` go to the
    outer face) or ``(j, c, f)``: inside local face ``f`` of component ``c``
    of an earlier part ``j``.  Vertices and edges are relabelled
    consecutively in part order.
    """
    vertices, edges, rotation = [], {}, {}
    anchors, outer = {}, {}
    comp_offset, vshift, eshift = [], 0, 0
    ncomp = 0
    for i, P in enumerate(parts):
        vmap = {v: vshift + k for k, v in enumerate(P.vertices)}
        emap = {e: eshift + k for k, e in enumerate(P.edges)}
        vertices.extend(vmap[v] for v in P.vertices)
        for e, (u, w) in P.edges.items():
            edges[emap[e]] = (vmap[u], vmap[w])
        for v in P.vertices:
            rotation[vmap[v]] = [2 * emap[d >> 1] + (d & 1) for d in P.rotation[v]]
        comp_offset.append(ncomp)
        place = placements[i]
        for c in range(len(P.components)):
            a = P.anchors[c]
            if a is ROOT:
                if place is None:
                    anchors[ncomp + c] = ROOT
                else:
                    j, pc, f = place
                    if j >= i:
                        raise ValueError("placement must refer to an earlier part")
                    anchors[ncomp + c] = (comp_offset[j] + pc, f)
            else:
                anchors[ncomp + c] = (ncomp + a[0], a[1])
            outer[ncomp + c] = P.outer[c]
        ncomp += len(P.components)
        vshift += P.n
        eshift += P.m
    return PlaneMultigraph(vertices, edges, rotation, anchors, outer)
