"""Small dominating sets in simple plane triangulations.

Deleting an independent set ``I`` from a triangulation leaves a graph that
meets the partition theorem's preconditions, with one face per deleted
vertex whose boundary is that vertex's neighbourhood.  The smaller class
of the partition therefore dominates the whole triangulation and has at
most ``(n - |I|) / 2`` vertices.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import oracle
from .domatic_poly import check_theorem_input, theorem_partition
from .errors import BudgetExceeded, NotATriangulation, NotIndependent, PreconditionViolated
from .plane_core import PlaneMultigraph, delete_vertices
from .rng import SplitMix64
from .verify import is_dominating

MIN_DEGREE_FIRST = "min-degree"
MAX_DEGREE_FIRST = "max-degree"
RANDOM = "random"
STRATEGIES = (MIN_DEGREE_FIRST, MAX_DEGREE_FIRST, RANDOM)

BOUND_MT = "mt"      # n/3
BOUND_CRR = "crr"    # 2n/7
BOUND_OURS = "ours"  # (1 - alpha) n / 2

CSV_FIELDS = ("n", "independent_size", "alpha_num", "alpha_den", "dominating_size",
              "bound_mt", "bound_crr", "bound_ours", "gamma_exact", "winner", "mis_source")


def is_simple(G: PlaneMultigraph) -> bool:
    seen = set()
    for u, w in G.edges.values():
        key = (min(u, w), max(u, w))
        if u == w or key in seen:
            return False
        seen.add(key)
    return True


def is_plane_triangulation(G: PlaneMultigraph) -> bool:
    return (G.n >= 3 and G.is_connected() and is_simple(G)
            and all(f.length == 3 for f in G.faces))


def is_independent(G: PlaneMultigraph, I: Iterable[int]) -> bool:
    I = set(I)
    return all(not (u in I and w in I) for u, w in G.edges.values())


def is_maximal_independent(G: PlaneMultigraph, I: Iterable[int]) -> bool:
    I = set(I)
    return is_independent(G, I) and all(
        v in I or not I.isdisjoint(G.neighbors(v)) for v in G.vertices)


def greedy_mis(G: PlaneMultigraph, strategy: str = MIN_DEGREE_FIRST, seed: int = 0) -> frozenset:
    """Maximal independent set built greedily in the strategy's vertex order."""
    if strategy == MIN_DEGREE_FIRST:
        order = sorted(G.vertices, key=lambda v: (G.degree(v), v))
    elif strategy == MAX_DEGREE_FIRST:
        order = sorted(G.vertices, key=lambda v: (-G.degree(v), v))
    elif strategy == RANDOM:
        order = list(G.vertices)
        SplitMix64(seed).shuffle(order)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    chosen: set[int] = set()
    blocked: set[int] = set()
    for v in order:
        if v not in blocked:
            chosen.add(v)
            blocked.add(v)
            blocked.update(G.neighbors(v))
    return frozenset(chosen)


@dataclass(frozen=True)
class BoundReport:
    n: int
    independent_size: int
    alpha: Fraction
    dominating_size: int
    bound_mt: Fraction
    bound_crr: Fraction
    bound_ours: Fraction
    gamma_exact: int | None
    winner: str
    mis_maximal: bool
    mis_source: str = "given"

    def row(self) -> dict:
        return {
            "n": self.n,
            "independent_size": self.independent_size,
            "alpha_num": self.alpha.numerator,
            "alpha_den": self.alpha.denominator,
            "dominating_size": self.dominating_size,
            "bound_mt": str(self.bound_mt),
            "bound_crr": str(self.bound_crr),
            "bound_ours": str(self.bound_ours),
            "gamma_exact": "" if self.gamma_exact is None else self.gamma_exact,
            "winner": self.winner,
            "mis_source": self.mis_source,
        }

    def to_dict(self) -> dict:
        d = self.row()
        d["alpha"] = str(self.alpha)
        d["mis_maximal"] = self.mis_maximal
        d["gamma_exact"] = self.gamma_exact
        return d


def winner(n: int, alpha: Fraction) -> str:
    """Smallest of the three bounds; ours wins only when strictly smallest."""
    ours = (1 - alpha) * n / 2
    crr, mt = Fraction(2 * n, 7), Fraction(n, 3)
    best = min(crr, mt)
    if ours < best:
        return BOUND_OURS
    return BOUND_CRR if crr <= mt else BOUND_MT


def best_independent_set(G: PlaneMultigraph, seed: int = 0,
                         budget: oracle.OracleBudget | None = None) -> tuple[frozenset, str]:
    """Largest of the greedy strategies, plus the exact optimum on small inputs."""
    cands = [(greedy_mis(G, s, seed), s) for s in STRATEGIES]
    try:
        cands.append((oracle.max_independent_exact(G, budget), "exact"))
    except BudgetExceeded:
        pass
    best = cands[0]
    for c in cands[1:]:
        if len(c[0]) > len(best[0]):
            best = c
    return best


def corollary_dominating_set(G: PlaneMultigraph, I: Iterable[int] | None = None,
                             exact: bool = False, seed: int = 0,
                             budget: oracle.OracleBudget | None = None):
    """Return ``(S, report)`` with ``S`` dominating ``G``.

    ``exact`` fills ``report.gamma_exact`` from the oracle when the graph is
    within budget.
    """
    if not is_plane_triangulation(G):
        raise NotATriangulation("input is not a simple plane triangulation")
    if I is None:
        I, source = best_independent_set(G, seed, budget)
    else:
        I = frozenset(I)
        source = "given"
        unknown = [v for v in I if v not in G]
        if unknown:
            raise NotIndependent(f"vertex {unknown[0]} is not in the graph")
        if not is_independent(G, I):
            raise NotIndependent("given set is not independent")
    rest = delete_vertices(G, I)
    try:
        check_theorem_input(rest)
    except PreconditionViolated as exc:  # pragma: no cover - would contradict the proof
        raise AssertionError(f"deleting an independent set broke {exc.reason}") from exc
    V1, V2 = theorem_partition(rest)
    S = V1 if len(V1) <= len(V2) else V2
    if not is_dominating(G, S):  # pragma: no cover
        raise AssertionError("corollary set does not dominate")

    n = G.n
    alpha = Fraction(len(I), n)
    gamma = None
    if exact:
        try:
            gamma = oracle.min_dominating_exact(G, budget)[0]
        except BudgetExceeded:
            gamma = None
    report = BoundReport(
        n=n,
        independent_size=len(I),
        alpha=alpha,
        dominating_size=len(S),
        bound_mt=Fraction(n, 3),
        bound_crr=Fraction(2 * n, 7),
        bound_ours=(1 - alpha) * n / 2,
        gamma_exact=gamma,
        winner=winner(n, alpha),
        mis_maximal=is_maximal_independent(G, I),
        mis_source=source,
    )
    return frozenset(S), report


@dataclass(frozen=True)
class BoundSummary:
    count: int
    frac_alpha_above_3_7: float
    frac_mis_below_2n_7: float
    mean_ratio: float
    winners: dict

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "frac_alpha_above_3_7": self.frac_alpha_above_3_7,
            "frac_mis_below_2n_7": self.frac_mis_below_2n_7,
            "mean_ratio": self.mean_ratio,
            "winners": dict(self.winners),
        }


def compare_bounds(reports: Iterable[BoundReport]) -> BoundSummary:
    reports = list(reports)
    k = len(reports)
    if k == 0:
        return BoundSummary(0, 0.0, 0.0, 0.0, {})
    above = sum(1 for r in reports if r.alpha > Fraction(3, 7))
    below = sum(1 for r in reports if r.independent_size < Fraction(2 * r.n, 7))
    ratio = sum(r.dominating_size / r.n for r in reports) / k
    wins = Counter(r.winner for r in reports)
    return BoundSummary(k, above / k, below / k, ratio, dict(sorted(wins.items())))


def reports_to_csv(reports: Iterable[BoundReport]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in reports:
        w.writerow(r.row())
    return buf.getvalue()
