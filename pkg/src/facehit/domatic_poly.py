"""Domatic and polychromatic 2-colourings.

``lemma_coloring`` handles a connected loopless graph of minimum degree 2:
augment it, 4-colour the augmented graph and merge colours {1,3} and
{2,4}.  ``theorem_coloring`` extends this to any plane multigraph without
isolated vertices, self-loops or 2-faces by trimming pendant vertices,
colouring the core, re-inserting pendants, and flipping nested components
where a face with several boundary walks came out monochromatic.
"""

from __future__ import annotations

import enum
import logging
from collections import deque
from dataclasses import dataclass, field

from . import oracle
from .augment import augment
from .errors import FacehitError, NonConvergence, PreconditionViolated
from .fourcolor import four_color, to_simple
from .plane_core import GlobalFace, PlaneMultigraph, restrict
from .verify import Side, TwoColoring, audit_two_coloring

log = logging.getLogger(__name__)

FALLBACK_CAP = 20


class Kind(enum.Enum):
    NONTRIVIAL = "nontrivial"
    TRIVIAL = "trivial"


@dataclass(frozen=True)
class ComponentPlan:
    component: int
    kind: Kind
    source: str  # "lemma" or "arbitrary"


@dataclass
class TrimRecord:
    # (pendant, parent, removed edge ids) in deletion order
    steps: list[tuple[int, int, tuple[int, ...]]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


# -- Lemma ----------------------------------------------------------------------------


def _merge(phi: dict[int, int]) -> dict[int, Side]:
    return {v: Side.A if c in (1, 3) else Side.B for v, c in phi.items()}


def lemma_coloring(G: PlaneMultigraph, fallback_cap: int = FALLBACK_CAP) -> dict[int, Side]:
    """Domatic and 3+-polychromatic 2-colouring of a Lemma input."""
    try:
        A = augment(G)
    except NonConvergence:
        if G.n > fallback_cap:
            raise
        log.warning("augment did not converge on n=%d; using exhaustive search", G.n)
        c = oracle.exists_dp_two_coloring(G, require_3plus_only=True,
                                          budget=oracle.OracleBudget(max(fallback_cap, 1)))
        if c is None:
            raise
        return c
    phi = four_color(to_simple(A.graph))
    unhappy = A.unhappy_vertices
    if unhappy:
        v = unhappy[0]
        u = min(A.true_neighbors(v))
        swap = {phi[v]: 1, 1: phi[v]}
        phi = {x: swap.get(c, c) for x, c in phi.items()}
        swap = {phi[u]: 2, 2: phi[u]}
        phi = {x: swap.get(c, c) for x, c in phi.items()}
    return _merge(phi)


# -- trimming ---------------------------------------------------------------------------


def trim(G: PlaneMultigraph) -> tuple[PlaneMultigraph, TrimRecord]:
    """Strip vertices with exactly one distinct neighbour until none remain.

    Vertices are removed first-in first-out: the initial pendants in id
    order, then each vertex as it becomes a pendant.  A component never
    vanishes: its last vertex has no neighbours left and stays isolated.
    """
    nbr: dict[int, dict[int, list[int]]] = {v: {} for v in G.vertices}
    for e, (u, w) in G.edges.items():
        nbr[u].setdefault(w, []).append(e)
        if u != w:
            nbr[w].setdefault(u, []).append(e)
    alive = set(G.vertices)
    dead_edges: set[int] = set()

    def deg(v: int) -> int:
        return sum(1 for x in nbr[v] if x != v)

    queue = deque(sorted(v for v in G.vertices if deg(v) == 1))
    rec = TrimRecord()
    while queue:
        v = queue.popleft()
        if v not in alive or deg(v) != 1:
            continue
        (parent,) = [x for x in nbr[v] if x != v]
        removed = tuple(sorted(e for es in nbr[v].values() for e in es))
        rec.steps.append((v, parent, removed))
        dead_edges.update(removed)
        alive.discard(v)
        del nbr[parent][v]
        del nbr[v]
        if deg(parent) == 1:
            queue.append(parent)
    core = restrict(G, alive, set(G.edges) - dead_edges)
    return core, rec


def component_plans(core: PlaneMultigraph) -> list[ComponentPlan]:
    plans = []
    for c, verts in enumerate(core.components):
        if len(verts) == 1:
            plans.append(ComponentPlan(c, Kind.TRIVIAL, "arbitrary"))
        else:
            plans.append(ComponentPlan(c, Kind.NONTRIVIAL, "lemma"))
    return plans


# -- Theorem ----------------------------------------------------------------------------


def is_two_face(f: GlobalFace) -> bool:
    """Length 2 and bounded by two parallel edges.

    The single face of a lone edge also has length 2, but it traverses one
    edge twice and its two ends must differ anyway, so it is allowed.
    """
    return f.length == 2 and len({d >> 1 for w in f.walks for d in w.darts}) == 2


def check_theorem_input(G: PlaneMultigraph) -> None:
    loops = G.self_loops()
    if loops:
        e = loops[0]
        raise PreconditionViolated("self-loop", e, f"self-loop present: edge {e} at vertex {G.edges[e][0]}")
    iso = G.isolated_vertices()
    if iso:
        raise PreconditionViolated("isolated-vertex", iso[0], f"isolated vertex present: {iso[0]}")
    for f in G.faces:
        if is_two_face(f):
            vs = sorted(f.boundary_vertices)
            raise PreconditionViolated("2-face", f.id, f"2-face present: face {f.id} on vertices {vs}")


def _outer_owner(G: PlaneMultigraph) -> dict[int, list[int]]:
    """Global face id -> components whose outer local face lies in it."""
    out: dict[int, list[int]] = {}
    for c in range(len(G.components)):
        out.setdefault(G.face_of_local(c, G.outer[c]), []).append(c)
    return out


def _mono_faces(G: PlaneMultigraph, col: TwoColoring) -> list[int]:
    bad = []
    for f in G.faces:
        if len({col[v] for v in f.boundary_vertices}) < 2:
            bad.append(f.id)
    return bad


def _satisfied_vertices(G: PlaneMultigraph, col: TwoColoring) -> set[int]:
    return {v for v in G.vertices if any(col[u] != col[v] for u in G.neighbors(v))}


def _replay_check(G: PlaneMultigraph, core: PlaneMultigraph, rec: TrimRecord,
                  col: TwoColoring) -> None:
    # debug: pendant insertion never loses a satisfied vertex or face
    verts = set(core.vertices)
    edges = set(core.edges)
    H = core
    sat = _satisfied_vertices(H, col)
    mono = len(_mono_faces(H, col))
    for v, _parent, removed in reversed(rec.steps):
        verts.add(v)
        edges.update(removed)
        H = restrict(G, verts, edges)
        now = _satisfied_vertices(H, col)
        if not sat <= now:
            raise FacehitError(f"reinserting {v} unsatisfied {sorted(sat - now)}")
        m = len(_mono_faces(H, col))
        if m > mono:
            raise FacehitError(f"reinserting {v} created a monochromatic face")
        sat, mono = now, m


def theorem_coloring(G: PlaneMultigraph, debug: bool = False) -> dict[int, Side]:
    """Domatic and polychromatic 2-colouring of ``G``."""
    check_theorem_input(G)
    core, rec = trim(G)
    col: dict[int, Side] = {}
    for plan in component_plans(core):
        verts = core.components[plan.component]
        if plan.kind is Kind.TRIVIAL:
            col[verts[0]] = Side.A
        else:
            col.update(lemma_coloring(core.component_graph(plan.component)))
    for v, parent, _ in reversed(rec.steps):
        col[v] = col[parent].other()
    if debug:
        _replay_check(G, core, rec, col)

    repair_faces(G, col, debug)
    return col


def repair_faces(G: PlaneMultigraph, col: dict[int, Side], debug: bool = False) -> list[int]:
    """Flip nested components until every face sees both classes.

    Flipping the subtree of component ``c`` recolours whole closed
    neighbourhoods, and the only face mixing flipped and unflipped walks is
    the one holding ``c``'s outer walk.  Each flip therefore repairs one
    face and leaves every other vertex and face as it was.  ``col`` is
    updated in place; the flipped components are returned.
    """
    owners = _outer_owner(G)
    flipped = []
    for fid in _mono_faces(G, col):
        f = G.faces[fid]
        walk_comps = {c for c, _ in f.members}
        cands = [c for c in sorted(owners.get(fid, []))
                 if not walk_comps <= set(G.subtree(c))]
        if not cands:
            raise FacehitError(f"face {fid} is monochromatic and has no component to flip")
        c = cands[0]
        if debug:
            dom_before = audit_two_coloring(G, col).domatic
            mono_before = set(_mono_faces(G, col))
        for x in G.subtree(c):
            for v in G.components[x]:
                col[v] = col[v].other()
        if debug:
            assert audit_two_coloring(G, col).domatic == dom_before
            assert set(_mono_faces(G, col)) == mono_before - {fid}
        log.debug("flipped subtree of component %d for face %d", c, fid)
        flipped.append(c)
    return flipped


def theorem_partition(G: PlaneMultigraph) -> tuple[frozenset, frozenset]:
    """Two disjoint classes, each dominating and face-hitting."""
    col = theorem_coloring(G)
    V1 = frozenset(v for v, s in col.items() if s is Side.A)
    V2 = frozenset(v for v, s in col.items() if s is Side.B)
    return V1, V2
