"""Time the oracle kernels: numba against the pure-numpy path.

    python3 benchmarks/bench_kernels.py [--n 18] [--repeat 3]

Both paths run in one process on the same inputs; answers must agree.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from facehit import generators, oracle
from facehit.oracle import _kernels as K


def best_of(fn, repeat: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=18)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--colorings", type=int, default=100_000)
    args = ap.parse_args()

    G = generators.stacked_triangulation(args.n, 1)
    nbr = oracle.closed_neighborhood_masks(G)
    faces = oracle.face_masks(G)
    sets = np.concatenate([nbr, faces])
    masks = oracle.random_coloring_masks(G.n, args.colorings, 7)
    full = (1 << G.n) - 1

    cases = {
        "min_hitting(dominating)": (lambda: K.np_min_hitting(nbr, G.n),
                                    lambda: int(K._nb_min_hitting(nbr, G.n))),
        "first_bichromatic": (lambda: K.np_first_bichromatic(sets, G.n),
                              lambda: int(K._nb_first_bichromatic(sets, G.n))),
        "audit_batch": (lambda: K.np_audit_batch(masks, nbr, faces, full),
                        lambda: K._nb_audit_batch(masks, nbr, faces, np.uint64(full))),
    }
    print(f"n={G.n} faces={len(faces)} colorings={len(masks)} backend={K.backend()}")
    print(f"{'kernel':28s} {'numpy s':>10s} {'numba s':>10s} {'speedup':>8s}  agree")
    for name, (np_fn, nb_fn) in cases.items():
        t_np, r_np = best_of(np_fn, args.repeat)
        if not K.HAVE_NUMBA:
            print(f"{name:28s} {t_np:10.4f} {'-':>10s} {'-':>8s}  -")
            continue
        nb_fn()  # compile
        t_nb, r_nb = best_of(nb_fn, args.repeat)
        if isinstance(r_np, tuple):
            agree = all(np.array_equal(a, b) for a, b in zip(r_np, r_nb))
        else:
            agree = r_np == r_nb
        print(f"{name:28s} {t_np:10.4f} {t_nb:10.4f} {t_np / max(t_nb, 1e-9):8.1f}  {agree}")


if __name__ == "__main__":
    main()
