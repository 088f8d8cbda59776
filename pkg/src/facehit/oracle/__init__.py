"""Exact exponential-time ground truth for small plane multigraphs.

Vertex ``G.vertices[i]`` is bit ``i`` of every mask.  In a colouring mask,
a set bit means class B and a clear bit class A.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import BadParameter, BudgetExceeded
from ..plane_core import PlaneMultigraph
from ..rng import SplitMix64
from ..verify import Side, TwoColoring
from . import _kernels
from ._kernels import backend


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 20
    max_nodes: int = 1 << 22

    def __post_init__(self):
        if self.max_vertices <= 0 or self.max_nodes <= 0:
            raise BadParameter("oracle budget must be positive")
        if self.max_vertices > 62:
            raise BadParameter("masks hold at most 62 vertices")


DEFAULT_BUDGET = OracleBudget()


def _check(G: PlaneMultigraph, budget: OracleBudget | None) -> None:
    budget = budget or DEFAULT_BUDGET
    if G.n > budget.max_vertices:
        raise BudgetExceeded(f"{G.n} vertices exceeds oracle cap {budget.max_vertices}")
    if (1 << G.n) > budget.max_nodes:
        raise BudgetExceeded(f"search space 2^{G.n} exceeds node cap {budget.max_nodes}")


def _bit(G: PlaneMultigraph) -> dict[int, int]:
    return {v: 1 << i for i, v in enumerate(G.vertices)}


def closed_neighborhood_masks(G: PlaneMultigraph) -> np.ndarray:
    bit = _bit(G)
    out = []
    for v in G.vertices:
        m = bit[v]
        for u in G.neighbors(v):
            m |= bit[u]
        out.append(m)
    return np.array(out, dtype=np.uint64)


def face_masks(G: PlaneMultigraph, min_length: int = 0) -> np.ndarray:
    bit = _bit(G)
    out = []
    for f in G.faces:
        if f.length >= min_length:
            m = 0
            for v in f.boundary_vertices:
                m |= bit[v]
            out.append(m)
    return np.array(out, dtype=np.uint64)


def _members(G: PlaneMultigraph, mask: int) -> frozenset:
    return frozenset(v for i, v in enumerate(G.vertices) if mask >> i & 1)


def mask_to_coloring(G: PlaneMultigraph, mask: int) -> dict[int, Side]:
    return {v: Side.B if mask >> i & 1 else Side.A for i, v in enumerate(G.vertices)}


def coloring_to_mask(G: PlaneMultigraph, c: TwoColoring) -> int:
    return sum(1 << i for i, v in enumerate(G.vertices) if c[v] == Side.B)


def min_dominating_exact(G: PlaneMultigraph, budget: OracleBudget | None = None):
    """``(gamma, witness)`` with the witness a minimum dominating set."""
    _check(G, budget)
    mask = _kernels.min_hitting(closed_neighborhood_masks(G), G.n)
    w = _members(G, mask)
    return len(w), w


def min_face_hitting_exact(G: PlaneMultigraph, budget: OracleBudget | None = None):
    """``(beta, witness)`` with the witness a minimum face-hitting set."""
    _check(G, budget)
    mask = _kernels.min_hitting(face_masks(G), G.n)
    w = _members(G, mask)
    return len(w), w


def max_independent_exact(G: PlaneMultigraph, budget: OracleBudget | None = None) -> frozenset:
    """A maximum independent set (complement of a minimum vertex cover)."""
    _check(G, budget)
    bit = _bit(G)
    covers = np.array(sorted({bit[u] | bit[w] for u, w in G.edges.values()}), dtype=np.uint64)
    mask = _kernels.min_hitting(covers, G.n)
    return frozenset(G.vertices) - _members(G, mask)


def exists_dp_two_coloring(G: PlaneMultigraph, require_3plus_only: bool = False,
                           budget: OracleBudget | None = None) -> dict[int, Side] | None:
    """A domatic and polychromatic 2-colouring, or ``None`` if none exists.

    With ``require_3plus_only`` only faces of length >= 3 must be
    bichromatic.  The last vertex is fixed to class A to break the swap
    symmetry; the colouring returned has the smallest mask.
    """
    _check(G, budget)
    sets = np.concatenate([closed_neighborhood_masks(G),
                           face_masks(G, 3 if require_3plus_only else 0)])
    mask = _kernels.first_bichromatic(sets, G.n)
    return None if mask < 0 else mask_to_coloring(G, mask)


def random_coloring_masks(n: int, count: int, seed: int) -> np.ndarray:
    rng = SplitMix64(seed)
    keep = (1 << n) - 1
    return np.array([rng.next_u64() & keep for _ in range(count)], dtype=np.uint64)


def audit_masks(G: PlaneMultigraph, masks: np.ndarray,
                require_3plus_only: bool = False) -> tuple[np.ndarray, np.ndarray]:
    """Batched audit: per mask, (domatic, polychromatic) as bool arrays."""
    if G.n > 62:
        raise BudgetExceeded("batched audit holds at most 62 vertices")
    full = (1 << G.n) - 1
    return _kernels.audit_batch(masks, closed_neighborhood_masks(G),
                                face_masks(G, 3 if require_3plus_only else 0), full)


__all__ = [
    "OracleBudget", "DEFAULT_BUDGET", "BudgetExceeded", "backend",
    "min_dominating_exact", "min_face_hitting_exact", "max_independent_exact",
    "exists_dp_two_coloring", "audit_masks", "random_coloring_masks",
    "mask_to_coloring", "coloring_to_mask",
    "closed_neighborhood_masks", "face_masks",
]
