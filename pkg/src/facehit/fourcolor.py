"""Proper vertex colorings of planar graphs with at most four colours.

A smallest-last greedy pass with Kempe-chain repair handles nearly every
input; an exact DSATUR backtracking search is the fallback, so the result
is always a proper 4-colouring when one exists.
"""

from __future__ import annotations

import sys
from collections import deque

from .errors import NotFourColorable, SelfLoopPresent
from .plane_core import PlaneMultigraph

Adjacency = dict[int, set[int]]


def to_simple(G: PlaneMultigraph) -> Adjacency:
    """Underlying simple graph; parallel edges collapse."""
    loops = G.self_loops()
    if loops:
        raise SelfLoopPresent(f"edge {loops[0]} is a self-loop")
    adj: Adjacency = {v: set() for v in G.vertices}
    for u, w in G.edges.values():
        adj[u].add(w)
        adj[w].add(u)
    return adj


def _adjacency(G) -> Adjacency:
    return to_simple(G) if isinstance(G, PlaneMultigraph) else {v: set(n) for v, n in G.items()}


def smallest_last_order(adj: Adjacency) -> list[int]:
    deg = {v: len(n) for v, n in adj.items()}
    buckets: dict[int, set[int]] = {}
    for v, d in deg.items():
        buckets.setdefault(d, set()).add(v)
    removed: set[int] = set()
    order = []
    low = 0
    for _ in range(len(adj)):
        low = max(low - 1, 0)
        while not buckets.get(low):
            low += 1
        v = min(buckets[low])
        buckets[low].discard(v)
        removed.add(v)
        order.append(v)
        for u in adj[v]:
            if u not in removed:
                buckets[deg[u]].discard(u)
                deg[u] -= 1
                buckets.setdefault(deg[u], set()).add(u)
    order.reverse()
    return order


def _kempe_swap(adj: Adjacency, col: dict[int, int], start: int, a: int, b: int) -> set[int]:
    chain = {start}
    todo = deque([start])
    while todo:
        x = todo.popleft()
        for y in adj[x]:
            if y not in chain and col.get(y) in (a, b):
                chain.add(y)
                todo.append(y)
    for x in chain:
        col[x] = b if col[x] == a else a
    return chain


def _try_kempe(adj: Adjacency, col: dict[int, int], v: int, k: int) -> bool:
    nbrs = [u for u in adj[v] if u in col]
    for a in range(1, k + 1):
        for b in range(a + 1, k + 1):
            for u in nbrs:
                if col[u] != a:
                    continue
                saved = dict(col)
                _kempe_swap(adj, col, u, a, b)
                if a not in {col[x] for x in nbrs}:
                    col[v] = a
                    return True
                col.clear()
                col.update(saved)
    return False


def _greedy_kempe(adj: Adjacency, k: int) -> dict[int, int] | None:
    col: dict[int, int] = {}
    for v in smallest_last_order(adj):
        used = {col[u] for u in adj[v] if u in col}
        free = [c for c in range(1, k + 1) if c not in used]
        if free:
            col[v] = free[0]
        elif not _try_kempe(adj, col, v, k):
            return None
    return col


def exact_coloring(G, k: int) -> dict[int, int] | None:
    """DSATUR backtracking: a proper ``k``-colouring or ``None``."""
    adj = _adjacency(G)
    if any(v in n for v, n in adj.items()):
        return None
    col: dict[int, int] = {}
    verts = list(adj)

    def pick() -> int:
        best, key = -1, None
        for v in verts:
            if v in col:
                continue
            sat = len({col[u] for u in adj[v] if u in col})
            kk = (sat, len(adj[v]), -v)
            if key is None or kk > key:
                best, key = v, kk
        return best

    def rec(left: int) -> bool:
        if left == 0:
            return True
        v = pick()
        used = {col[u] for u in adj[v] if u in col}
        top = max(col.values(), default=0)
        # symmetry: never open more than one new colour
        for c in range(1, min(k, top + 1) + 1):
            if c in used:
                continue
            col[v] = c
            if rec(left - 1):
                return True
            del col[v]
        return False

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * len(verts) + 100))
    try:
        return dict(col) if rec(len(verts)) else None
    finally:
        sys.setrecursionlimit(old)


def four_color(G) -> dict[int, int]:
    """Proper colouring with colours in ``{1, 2, 3, 4}``."""
    adj = _adjacency(G)
    col = _greedy_kempe(adj, 4)
    if col is None:
        col = exact_coloring(adj, 4)
    if col is None:
        raise NotFourColorable("graph has no proper 4-colouring")
    return col


def verify_proper(G, col: dict[int, int], k: int = 4) -> bool:
    adj = _adjacency(G)
    if set(col) != set(adj):
        return False
    if any(not 1 <= c <= k for c in col.values()):
        return False
    return all(col[u] != col[w] for u in adj for w in adj[u])
