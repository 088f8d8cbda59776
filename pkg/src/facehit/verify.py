"""Ground-truth predicates for domination, face hitting and 2-colorings."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, Mapping

from .plane_core import PlaneMultigraph


class Side(IntEnum):
    A = 0
    B = 1

    def other(self) -> "Side":
        return Side(1 - self)

    def __str__(self) -> str:
        return self.name


TwoColoring = Mapping[int, Side]

VERTEX = "vertex"
FACE = "face"
FACE_3PLUS = "face3plus"


@dataclass
class ColoringAudit:
    domatic: bool
    polychromatic: bool
    polychromatic_3plus: bool
    violations: list[tuple[str, int]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "domatic": self.domatic,
            "polychromatic": self.polychromatic,
            "polychromatic_3plus": self.polychromatic_3plus,
            "violations": [list(v) for v in self.violations],
        }


def is_dominating(G: PlaneMultigraph, S: Iterable[int]) -> bool:
    S = set(S)
    return all(v in S or not S.isdisjoint(G.neighbors(v)) for v in G.vertices)


def is_face_hitting(G: PlaneMultigraph, S: Iterable[int]) -> bool:
    S = set(S)
    return all(not S.isdisjoint(f.boundary_vertices) for f in G.faces)


def classes(c: TwoColoring) -> tuple[frozenset, frozenset]:
    a = frozenset(v for v, s in c.items() if s == Side.A)
    b = frozenset(v for v, s in c.items() if s == Side.B)
    return a, b


def audit_two_coloring(G: PlaneMultigraph, c: TwoColoring) -> ColoringAudit:
    """Check every closed neighbourhood and every face for both colours."""
    missing = [v for v in G.vertices if v not in c]
    if missing:
        raise ValueError(f"coloring is not total: vertex {missing[0]} uncolored")
    violations: list[tuple[str, int]] = []
    for v in G.vertices:
        s = c[v]
        if all(c[u] == s for u in G.neighbors(v)):
            violations.append((VERTEX, v))
    for f in G.faces:
        it = iter(f.boundary_vertices)
        s = c[next(it)]
        if all(c[u] == s for u in it):
            violations.append((FACE, f.id))
            if f.length >= 3:
                violations.append((FACE_3PLUS, f.id))
    kinds = {k for k, _ in violations}
    return ColoringAudit(
        domatic=VERTEX not in kinds,
        polychromatic=FACE not in kinds,
        polychromatic_3plus=FACE_3PLUS not in kinds,
        violations=violations,
    )
