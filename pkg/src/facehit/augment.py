"""Dummy-edge augmentation G -> G'.

Starting from a connected loopless plane multigraph ``G`` of minimum degree
two, chords ("dummy edges") are added inside faces until every face of
length three or more is *happy* (its boundary vertices induce a triangle)
and at most one vertex is *unhappy* (no two true neighbours of it are
adjacent).  Every dummy ``uw`` is created across a corner ``u-v-w`` whose
sides are true edges, so it closes a facial triangle with two true edges.

The construction is driven by four local moves, applied until none of
them changes anything:

* fill      -- an unhappy vertex with an empty true angle gets the chord
               across that angle;
* release   -- a dummy at an unhappy vertex that keeps nobody happy is
               dropped, and the angle it occupied is filled if it empties;
* redundant -- any dummy whose removal changes no happiness is dropped;
* shift     -- at an unhappy vertex whose every angle holds exactly one
               critical dummy, one of them is traded for the chord across
               its angle.  This moves the unhappiness to a chosen true
               neighbour and is used to walk one of two unhappy vertices
               towards the other until one of the first three moves applies.

Happiness never decreases under fill/release/redundant, and the pair
(happy vertices, -dummy edges) increases strictly, so the loop terminates;
an explicit step cap guards against surprises.
"""

from __future__ import annotations

import enum
import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .errors import (
    DegreeTooLow,
    NoTransferEdge,
    NonConvergence,
    NotAChord,
    PreconditionViolated,
    VertexAlreadyHappy,
    WouldSelfLoop,
)
from .plane_core import ROOT, PlaneMultigraph, dumps, restrict

log = logging.getLogger(__name__)

TRUE = "true"
DUMMY = "dummy"


class Outcome(enum.Enum):
    MADE_HAPPY = "made-happy"
    NO_FREE_ANGLE = "no-free-angle"


@dataclass(frozen=True)
class AugmentedGraph:
    base: PlaneMultigraph
    graph: PlaneMultigraph
    edge_kind: Mapping[int, str]
    # base face hosting each dummy edge
    dummy_face: Mapping[int, int] = field(default_factory=dict)

    @property
    def dummy_edges(self) -> list[int]:
        return [e for e, k in self.edge_kind.items() if k == DUMMY]

    def is_dummy(self, e: int) -> bool:
        return self.edge_kind[e] == DUMMY

    def true_neighbors(self, v: int) -> frozenset:
        return self.base.neighbors(v)

    def true_graph(self) -> PlaneMultigraph:
        """``graph`` with every dummy edge removed."""
        keep = {e for e, k in self.edge_kind.items() if k == TRUE}
        return restrict(self.graph, set(self.graph.vertices), keep)

    def to_plg(self) -> str:
        return dumps(self.graph, dict(self.edge_kind))

    @property
    def unhappy_vertices(self) -> list[int]:
        return [v for v in self.graph.vertices if not is_vertex_happy(self, v)]


@dataclass(frozen=True)
class TrueAngle:
    apex: int
    arms: tuple[int, int]
    occupied: int
    dummies: tuple[int, ...] = ()


@dataclass
class HappinessLedger:
    happy_vertices: set
    happy_faces: set
    dummy_at: dict
    made_happy_by: dict

    def true_neighbors_happy(self, A: AugmentedGraph, v: int) -> set:
        return {u for u in A.true_neighbors(v) if u in self.happy_vertices}


def _key(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


class _Work:
    """Mutable working copy of an augmented graph."""

    def __init__(self, base: PlaneMultigraph, graph: PlaneMultigraph | None = None,
                 kinds: Mapping[int, str] | None = None,
                 dummy_face: Mapping[int, int] | None = None):
        graph = graph or base
        self.base = base
        self.vertices = graph.vertices
        self.edges = dict(graph.edges)
        self.rot = {v: list(graph.rotation[v]) for v in graph.vertices}
        self.dummy = {e for e, k in (kinds or {}).items() if k == DUMMY}
        self.dummy_face = dict(dummy_face or {})
        self.next_eid = max(self.edges, default=-1) + 1
        self.tnb = {v: base.neighbors(v) for v in base.vertices}
        self.adj: dict[int, Counter] = {v: Counter() for v in self.vertices}
        for u, w in self.edges.values():
            if u != w:
                self.adj[u][w] += 1
                self.adj[w][u] += 1
        self.base_face_of_dart = {d: base.face_of_dart(d) for d in base.darts()}
        self.faces_at = {v: base.faces_at(v) for v in base.vertices}
        self.face_verts = {f.id: f.boundary_vertices for f in base.faces}
        self.faces3 = {f.id for f in base.faces if f.length >= 3}
        self.own = Counter(self.dummy_face[e] for e in self.dummy)
        self.base_happy = {f: self._induced_triangle(f, None, true_only=True)
                           for f in self.faces3}
        self.happy = {v for v in self.vertices if self.vertex_happy(v)}
        self.steps = 0

    # -- geometry ---------------------------------------------------------------

    def tail(self, d: int) -> int:
        return self.edges[d >> 1][d & 1]

    def head(self, d: int) -> int:
        return self.edges[d >> 1][1 - (d & 1)]

    def rot_next(self, d: int) -> int:
        r = self.rot[self.tail(d)]
        return r[(r.index(d) + 1) % len(r)]

    def succ(self, d: int) -> int:
        return self.rot_next(d ^ 1)

    def is_true(self, e: int) -> bool:
        return e not in self.dummy

    # -- happiness --------------------------------------------------------------

    def mult(self, a: int, b: int, skip: tuple[int, int] | None = None) -> int:
        m = self.adj[a][b]
        if skip is not None and _key(a, b) == skip:
            m -= 1
        return m

    def vertex_happy(self, y: int, skip=None) -> bool:
        nb = sorted(self.tnb[y])
        for i, p in enumerate(nb):
            ap = self.adj[p]
            for q in nb[i + 1:]:
                if ap[q] and (skip is None or _key(p, q) != skip or ap[q] > 1):
                    return True
        return False

    def _induced_triangle(self, fid: int, skip, true_only: bool = False) -> bool:
        V = self.face_verts[fid]
        if true_only:
            nbr = {p: [q for q in self.tnb[p] if q in V] for p in V}
            adjacent = lambda p, q: q in self.tnb[p]  # noqa: E731
        else:
            nbr = {p: [q for q in self.adj[p] if q in V and self.mult(p, q, skip) > 0]
                   for p in V}
            adjacent = lambda p, q: self.mult(p, q, skip) > 0  # noqa: E731
        for p in V:
            nb = sorted(nbr[p])
            for i, q in enumerate(nb):
                if q < p:
                    continue
                for r in nb[i + 1:]:
                    if adjacent(q, r):
                        return True
        return False

    def face_happy(self, fid: int, skip_edge: int | None = None) -> bool:
        if self.base_happy[fid]:
            return True
        own = self.own[fid]
        if skip_edge is not None and self.dummy_face.get(skip_edge) == fid:
            own -= 1
        if own > 0:
            return True
        skip = None if skip_edge is None else _key(*self.edges[skip_edge])
        return self._induced_triangle(fid, skip)

    def critical(self, e: int) -> list[int]:
        """Vertices that lose happiness if edge ``e`` is removed."""
        a, b = self.edges[e]
        skip = _key(a, b)
        if self.adj[a][b] > 1:
            return []
        return sorted(y for y in self.tnb[a] & self.tnb[b]
                      if y in self.happy and not self.vertex_happy(y, skip))

    def faces_survive(self, e: int, exempt: int | None = None) -> bool:
        a, b = self.edges[e]
        for fid in (self.faces_at[a] & self.faces_at[b]) & self.faces3:
            if fid != exempt and not self.face_happy(fid, e):
                return False
        return True

    # -- mutation ---------------------------------------------------------------

    def add_chord(self, d_in: int) -> int:
        """Add a dummy across the corner entered by true dart ``d_in``."""
        d_out = self.succ(d_in)
        u, w = self.tail(d_in), self.head(d_out)
        if u == w:
            raise WouldSelfLoop(f"chord {u}-{w} would be a self-loop")
        e = self.next_eid
        self.next_eid += 1
        self.edges[e] = (u, w)
        ru = self.rot[u]
        ru.insert(ru.index(d_in), 2 * e)
        rw = self.rot[w]
        rw.insert(rw.index(d_out ^ 1) + 1, 2 * e + 1)
        self.dummy.add(e)
        fid = self.base_face_of_dart[d_in]
        self.dummy_face[e] = fid
        self.own[fid] += 1
        self.adj[u][w] += 1
        self.adj[w][u] += 1
        for y in self.tnb[u] & self.tnb[w]:
            self.happy.add(y)
        self.steps += 1
        return e

    def remove_dummy(self, e: int) -> None:
        u, w = self.edges.pop(e)
        self.rot[u].remove(2 * e)
        self.rot[w].remove(2 * e + 1)
        self.dummy.discard(e)
        self.own[self.dummy_face.pop(e)] -= 1
        self.adj[u][w] -= 1
        self.adj[w][u] -= 1
        if not self.adj[u][w]:
            del self.adj[u][w]
            del self.adj[w][u]
        for y in self.tnb[u] & self.tnb[w]:
            if y in self.happy and not self.vertex_happy(y):
                self.happy.discard(y)
        self.steps += 1

    # -- angles -----------------------------------------------------------------

    def true_angles(self, v: int) -> list[TrueAngle]:
        if len(self.tnb[v]) < 2:
            raise DegreeTooLow(f"vertex {v} has {len(self.tnb[v])} distinct true neighbours")
        r = self.rot[v]
        pos = [i for i, d in enumerate(r) if self.is_true(d >> 1)]
        out = []
        k = len(pos)
        for j in range(k):
            i1, i2 = pos[j], pos[(j + 1) % k]
            a1, a2 = r[i1], r[i2]
            if self.head(a1) == self.head(a2):
                continue
            between = []
            i = (i1 + 1) % len(r)
            while i != i2:
                between.append(r[i] >> 1)
                i = (i + 1) % len(r)
            out.append(TrueAngle(v, (a1, a2), len(between), tuple(between)))
        return out

    def angle_of(self, v: int, e: int) -> TrueAngle | None:
        for ang in self.true_angles(v):
            if e in ang.dummies:
                return ang
        return None

    def fill(self, ang: TrueAngle) -> int:
        return self.add_chord(ang.arms[0] ^ 1)

    def try_fill(self, v: int) -> bool:
        if v in self.happy:
            return False
        for ang in self.true_angles(v):
            if ang.occupied == 0:
                self.fill(ang)
                return True
        return False

    def try_release(self, v: int) -> bool:
        for ang in self.true_angles(v):
            for e in ang.dummies:
                if self.critical(e):
                    continue
                fid = self.dummy_face[e]
                if ang.occupied > 1:
                    if not self.faces_survive(e):
                        continue
                    self.remove_dummy(e)
                else:
                    if not self.faces_survive(e, exempt=fid):
                        continue
                    self.remove_dummy(e)
                    self.fill(TrueAngle(v, ang.arms, 0))
                return True
        return False

    def remove_redundant(self) -> bool:
        for e in sorted(self.dummy):
            if not self.critical(e) and self.faces_survive(e):
                self.remove_dummy(e)
                return True
        return False

    def transfer_edge(self, v: int, u: int) -> tuple[int, TrueAngle]:
        angles = self.true_angles(v)
        if any(a.occupied == 0 for a in angles):
            raise NoTransferEdge(f"vertex {v} still has a free true angle")
        for ang in angles:
            if ang.occupied != 1:
                continue
            e = ang.dummies[0]
            if self.critical(e) == [u] and self.faces_survive(e, exempt=self.dummy_face[e]):
                return e, ang
        raise NoTransferEdge(f"no dummy at {v} whose removal unhappies exactly {u}")

    def shift(self, v: int, u: int) -> None:
        e, ang = self.transfer_edge(v, u)
        self.remove_dummy(e)
        self.fill(TrueAngle(v, ang.arms, 0))

    # -- face satisfaction --------------------------------------------------------

    def satisfy_faces(self) -> None:
        for f in self.base.faces:
            if f.id not in self.faces3 or self.face_happy(f.id):
                continue
            (walk,) = f.walks
            darts = walk.darts
            L = len(darts)
            for i in range(L):
                d_in, d_out = darts[i], darts[(i + 1) % L]
                u, w = self.tail(d_in), self.head(d_out)
                if u != w and not self.adj[u][w]:
                    self.add_chord(d_in)
                    break
            else:
                raise NonConvergence(f"face {f.id}: no chord available")

    # -- main loop ----------------------------------------------------------------

    def unhappy(self) -> list[int]:
        return [v for v in sorted(self.vertices) if v not in self.happy]

    def closest_pair_path(self, unhappy: list[int]) -> list[int]:
        targets = set(unhappy)
        best = None
        for s in unhappy:
            parent = {s: None}
            q = deque([s])
            found = None
            while q and found is None:
                x = q.popleft()
                for y in sorted(self.tnb[x]):
                    if y not in parent:
                        parent[y] = x
                        if y in targets:
                            found = y
                            break
                        q.append(y)
            if found is None:
                continue
            path = [found]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            path.reverse()
            if best is None or len(path) < len(best):
                best = path
        if best is None:
            raise NonConvergence("unhappy vertices are not connected by true edges")
        return best

    def run(self, cap: int) -> None:
        self.satisfy_faces()
        while True:
            if self.steps > cap:
                raise NonConvergence(f"exceeded {cap} augmentation steps")
            unhappy = self.unhappy()
            if any(self.try_fill(v) for v in unhappy):
                continue
            if any(self.try_release(v) for v in unhappy):
                continue
            if self.remove_redundant():
                continue
            if len(unhappy) <= 1:
                return
            path = self.closest_pair_path(unhappy)
            self.shift_along(path, cap)

    def shift_along(self, path: list[int], cap: int) -> None:
        for i in range(len(path) - 2):
            x, y = path[i], path[i + 1]
            try:
                self.shift(x, y)
            except NoTransferEdge:
                if not self.remove_redundant():
                    raise NonConvergence(f"stuck shifting unhappiness from {x} to {y}")
                return
            if self.steps > cap:
                return
            if self.try_fill(y) or self.try_release(y):
                return
        x = path[-2]
        if x not in self.happy and not (self.try_fill(x) or self.try_release(x)):
            raise NonConvergence(
                f"adjacent unhappy vertices {x} and {path[-1]} admit no local improvement")

    # -- export -------------------------------------------------------------------

    def freeze(self) -> AugmentedGraph:
        base = self.base
        key = base.local_faces(0)[base.outer[0]].darts[0]
        edges = dict(self.edges)
        G = PlaneMultigraph(self.vertices, edges, self.rot, {0: ROOT})
        idx = G.local_face_of(key)[1]
        if idx != 0:
            G = PlaneMultigraph(self.vertices, edges, self.rot, {0: ROOT}, {0: idx})
        kinds = {e: (DUMMY if e in self.dummy else TRUE) for e in edges}
        return AugmentedGraph(base, G, MappingProxyType(kinds),
                              MappingProxyType(dict(self.dummy_face)))


def _work(A: AugmentedGraph) -> _Work:
    return _Work(A.base, A.graph, A.edge_kind, A.dummy_face)


def _check_lemma_input(G: PlaneMultigraph) -> None:
    if G.n == 0:
        raise PreconditionViolated("empty-graph")
    if G.has_self_loops():
        raise PreconditionViolated("self-loop", G.self_loops()[0])
    if not G.is_connected():
        raise PreconditionViolated("disconnected", len(G.components))
    for v in G.vertices:
        if G.degree(v) < 2:
            raise PreconditionViolated("degree-below-2", v)


def from_base(G: PlaneMultigraph) -> AugmentedGraph:
    """The trivial augmentation: no dummy edges yet."""
    return AugmentedGraph(G, G, MappingProxyType({e: TRUE for e in G.edges}),
                          MappingProxyType({}))


def is_vertex_happy(A: AugmentedGraph, v: int) -> bool:
    tnb = sorted(A.base.neighbors(v))
    adj: dict = {}
    for i, p in enumerate(tnb):
        nb = adj.get(p)
        if nb is None:
            nb = adj[p] = A.graph.neighbors(p)
        if any(q in nb for q in tnb[i + 1:]):
            return True
    return False


def is_face_happy(A: AugmentedGraph, fid: int) -> bool:
    """Does base face ``fid`` induce a triangle in ``A.graph``?"""
    V = A.base.faces[fid].boundary_vertices
    for p in V:
        nb = sorted(q for q in A.graph.neighbors(p) if q in V and q > p)
        for i, q in enumerate(nb):
            nq = A.graph.neighbors(q)
            if any(r in nq for r in nb[i + 1:]):
                return True
    return False


def true_angles(A: AugmentedGraph, v: int) -> list[TrueAngle]:
    return _work(A).true_angles(v)


def ledger(A: AugmentedGraph) -> HappinessLedger:
    W = _work(A)
    dummy_at: dict[int, set] = {v: set() for v in A.graph.vertices}
    made: dict[int, set] = {}
    for e in W.dummy:
        a, b = W.edges[e]
        dummy_at[a].add(e)
        dummy_at[b].add(e)
        made[e] = set(W.tnb[a] & W.tnb[b])
    happy_faces = {f for f in W.faces3 if W.face_happy(f)}
    return HappinessLedger(set(W.happy), happy_faces, dummy_at, made)


def add_dummy_chord(A: AugmentedGraph, face: int, u: int, w: int) -> AugmentedGraph:
    """Insert dummy ``uw`` inside face ``face`` of ``A.graph``.

    ``u`` and ``w`` must be two steps apart on the face walk, joined through
    a middle vertex by true edges.
    """
    if u == w:
        raise WouldSelfLoop(f"chord {u}-{w} would be a self-loop")
    G = A.graph
    walks = G.faces[face].walks
    for walk in walks:
        darts = walk.darts
        L = len(darts)
        for i in range(L):
            d_in, d_out = darts[i], darts[(i + 1) % L]
            if A.edge_kind[d_in >> 1] != TRUE or A.edge_kind[d_out >> 1] != TRUE:
                continue
            ends = (G.tail(d_in), G.head(d_out))
            if ends == (u, w) or ends == (w, u):
                W = _work(A)
                W.add_chord(d_in)
                return W.freeze()
    raise NotAChord(f"{u}-{w} is not a two-step true corner of face {face}")


def satisfy_faces(A: AugmentedGraph) -> AugmentedGraph:
    W = _work(A)
    W.satisfy_faces()
    return W.freeze()


def satisfy_vertex(A: AugmentedGraph, v: int) -> tuple[Outcome, AugmentedGraph]:
    W = _work(A)
    if v in W.happy:
        raise VertexAlreadyHappy(f"vertex {v} is already happy")
    if W.try_fill(v):
        return Outcome.MADE_HAPPY, W.freeze()
    return Outcome.NO_FREE_ANGLE, A


def remove_redundant_dummy(A: AugmentedGraph) -> tuple[bool, AugmentedGraph]:
    W = _work(A)
    if W.remove_redundant():
        return True, W.freeze()
    return False, A


def shift_unhappiness(A: AugmentedGraph, v: int, u: int) -> AugmentedGraph:
    W = _work(A)
    if v in W.happy:
        raise NoTransferEdge(f"vertex {v} is happy; nothing to shift")
    if u not in W.tnb[v]:
        raise NoTransferEdge(f"{u} is not a true neighbour of {v}")
    W.shift(v, u)
    return W.freeze()


def augment(G: PlaneMultigraph) -> AugmentedGraph:
    """Augment ``G`` until all 3+-faces are happy and <= 1 vertex is unhappy."""
    _check_lemma_input(G)
    W = _Work(G)
    cap = 10 * (G.n + G.m)
    W.run(cap)
    A = W.freeze()
    log.debug("augment: n=%d dummies=%d unhappy=%s steps=%d",
              G.n, len(W.dummy), W.unhappy(), W.steps)
    return A
