"""Acceptance suite: one test and one printed PASS/FAIL line per criterion.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import math
import time

import pytest

from facehit import augment as au
from facehit import generators as gen
from facehit import oracle
from facehit import triangulation as tr
from facehit.cli import main
from facehit.domatic_poly import check_theorem_input, theorem_partition
from facehit.errors import NonConvergence, PreconditionViolated
from facehit.fourcolor import exact_coloring, four_color, verify_proper
from facehit.plane_core import PlaneMultigraph, dumps
from facehit.verify import audit_two_coloring, is_dominating, is_face_hitting

pytestmark = pytest.mark.slow


def report(capsys, k: int, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\n[acceptance {k}] {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, detail


def _meets_theorem(G) -> bool:
    try:
        check_theorem_input(G)
    except PreconditionViolated:
        return False
    return True


def _connected_min_degree_2(G) -> bool:
    return (G.n >= 1 and not G.has_self_loops() and G.is_connected()
            and all(G.degree(v) >= 2 for v in G.vertices))


def test_1_theorem_property_suite(capsys):
    t0 = time.perf_counter()
    count, bad = 0, []
    for i in range(500):
        n = 10 + (i * 37) % 191
        seed = 0xACCE97 + i
        G = gen.random_theorem_instance(n, seed)
        V1, V2 = theorem_partition(G)
        ok = (not V1 & V2 and V1 | V2 == set(G.vertices)
              and all(is_dominating(G, S) and is_face_hitting(G, S) for S in (V1, V2))
              and min(len(V1), len(V2)) <= G.n // 2)
        count += 1
        if not ok:
            bad.append((n, seed))
    dt = time.perf_counter() - t0
    report(capsys, 1, not bad and count >= 500 and dt < 300,
           f"{count} instances n in [10,200], failures={bad[:5]}, {dt:.1f}s (limit 300s)")


def test_2_oracle_corroboration(capsys):
    t0 = time.perf_counter()
    small = [(name, G) for name, G in gen.corpus() if G.n <= 12 and _meets_theorem(G)]
    missing, disagree = [], []
    for name, G in small:
        c = oracle.exists_dp_two_coloring(G)
        if c is None:
            missing.append(name)
        else:
            a = audit_two_coloring(G, c)
            if not (a.domatic and a.polychromatic):
                missing.append(name)
        masks = oracle.random_coloring_masks(G.n, 10_000, hash(name) & 0xFFFFFFFF)
        dom, poly = oracle.audit_masks(G, masks)
        for m, d, p in zip(masks.tolist(), dom.tolist(), poly.tolist()):
            a = audit_two_coloring(G, oracle.mask_to_coloring(G, m))
            if (d, p) != (a.domatic, a.polychromatic):
                disagree.append(name)
                break
    dt = time.perf_counter() - t0
    report(capsys, 2, bool(small) and not missing and not disagree,
           f"{len(small)} instances, no-coloring={missing}, audit-disagreements={disagree}, "
           f"10000 colorings each, {dt:.1f}s")


def test_3_tightness(capsys):
    g5 = oracle.min_dominating_exact(gen.disjoint_family("edges", 5))[0]
    b1 = oracle.min_face_hitting_exact(gen.doubled_k4_family(1))[0]
    b2 = oracle.min_face_hitting_exact(gen.doubled_k4_family(2))[0]
    report(capsys, 3, (g5, b1, b2) == (5, 3, 6),
           f"gamma(5 edges)={g5} (want 5), beta(doubled K4)={b1} (want 3), "
           f"beta(2 doubled K4)={b2} (want 6)")


def test_4_necessity(capsys, tmp_path):
    none = oracle.exists_dp_two_coloring(gen.loop_gadget()) is None

    def color_exit(G):
        p = tmp_path / "g.plg"
        p.write_text(dumps(G))
        code = main(["color", str(p)])
        return code, capsys.readouterr().err

    code_2f, err_2f = color_exit(gen.doubled_k4_family(1))
    iso = PlaneMultigraph([0, 1, 2], {0: (0, 1)}, {0: [0], 1: [1]})
    code_iso, err_iso = color_exit(iso)
    ok = (none and code_2f == 3 and "2-face present: face" in err_2f
          and code_iso == 3 and "isolated vertex present: 2" in err_iso)
    report(capsys, 4, ok,
           f"loop gadget has no polychromatic coloring: {none}; doubled K4 exit={code_2f}; "
           f"isolated vertex exit={code_iso}")


def test_5_corollary_bound(capsys):
    failures, ratios = [], []
    for i in range(200):
        n = 4 + (i * 13) % 97
        T = gen.stacked_triangulation(n, 0xC0 + i)
        S, r = tr.corollary_dominating_set(T, exact=n <= 15)
        if not (is_dominating(T, S) and len(S) <= math.floor(r.bound_ours)):
            failures.append((n, i))
        if r.gamma_exact is not None:
            if r.gamma_exact > len(S):
                failures.append((n, i, "gamma"))
            ratios.append(len(S) / r.gamma_exact)
    detail = (f"200 triangulations n<=100, failures={failures[:5]}; "
              f"|S|/gamma over {len(ratios)} instances with n<=15: "
              f"mean {sum(ratios) / max(len(ratios), 1):.3f}, max {max(ratios, default=0):.3f}")
    report(capsys, 5, not failures, detail)


def test_6_large_independent_set_instances(capsys):
    hits, bad = [], []
    for name, G in gen.corpus():
        if not tr.is_plane_triangulation(G):
            continue
        S, r = tr.corollary_dominating_set(G)
        if 2 * r.independent_size >= G.n:
            hits.append(name)
            if len(S) > G.n // 4:
                bad.append(name)
    report(capsys, 6, bool(hits) and not bad,
           f"{len(hits)} corpus triangulations with |I| >= n/2 ({', '.join(hits)}); "
           f"violations={bad}")


def test_7_four_coloring(capsys):
    bad, checked, skipped = [], 0, []
    for name, G in gen.corpus():
        if G.has_self_loops():
            skipped.append(name)
            continue
        checked += 1
        if not verify_proper(G, four_color(G)):
            bad.append(name)
    ico = gen.icosahedron()
    needs_four = exact_coloring(ico, 3) is None and verify_proper(ico, four_color(ico))
    report(capsys, 7, not bad and needs_four,
           f"{checked} corpus graphs properly 4-colored (skipped with self-loops: {skipped}); "
           f"failures={bad}; icosahedron not 3-colorable: {needs_four}")


def _dummy_in_facial_triangle(A, e) -> bool:
    H = A.graph
    for d in (2 * e, 2 * e + 1):
        walk = [d, H.succ(d), H.succ(H.succ(d))]
        if H.succ(walk[-1]) == d and not any(A.is_dummy(x >> 1) for x in walk[1:]):
            return True
    return False


def test_8_augmentation_invariants(capsys):
    inputs = [(name, G) for name, G in gen.corpus() if _connected_min_degree_2(G)]
    bad, nonconv = [], []
    for name, G in inputs:
        try:
            A = au.augment(G)
        except NonConvergence as exc:
            nonconv.append(name)
            print(f"NonConvergence on corpus instance {name!r}: {exc}")
            continue
        faces_ok = all(au.is_face_happy(A, f.id) for f in G.faces if f.length >= 3)
        unhappy_ok = len(A.unhappy_vertices) <= 1
        tri_ok = all(_dummy_in_facial_triangle(A, e) for e in A.dummy_edges)
        base_ok = dumps(A.true_graph()) == dumps(G)
        if not (faces_ok and unhappy_ok and tri_ok and base_ok):
            bad.append((name, faces_ok, unhappy_ok, tri_ok, base_ok))
    report(capsys, 8, bool(inputs) and not bad and not nonconv,
           f"{len(inputs)} connected loopless min-degree-2 corpus graphs, invariant failures={bad}, "
           f"NonConvergence={len(nonconv)}/{len(inputs)}")
