"""Bitmask kernels behind the exact oracles.

Every subset of at most 63 vertices is a ``uint64`` mask.  Each kernel has
a numba version and a pure-numpy version that return identical answers;
set ``FACEHIT_DISABLE_NUMBA=1`` (or run without numba installed) to use
the numpy path.
"""

from __future__ import annotations

import os

import numpy as np

try:  # pragma: no cover - exercised by whichever path is active
    if os.environ.get("FACEHIT_DISABLE_NUMBA", "") not in ("", "0"):
        raise ImportError
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

CHUNK = 1 << 16


def backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"


# -- numpy reference path ---------------------------------------------------------


def _np_hits(S: np.ndarray, sets: np.ndarray) -> np.ndarray:
    """Row i is True iff mask S[i] meets every set."""
    ok = np.ones(S.shape[0], dtype=bool)
    for m in sets:
        ok &= (S & m) != 0
    return ok


def _np_bichromatic(S: np.ndarray, sets: np.ndarray, full: np.uint64) -> np.ndarray:
    ok = np.ones(S.shape[0], dtype=bool)
    for m in sets:
        ok &= ((S & m) != 0) & (((S ^ full) & m) != 0)
    return ok


def np_audit_batch(colorings, nbr, faces, full):
    """Per colouring: (every closed neighbourhood bichromatic, every face bichromatic)."""
    colorings = np.asarray(colorings, dtype=np.uint64)
    full = np.uint64(full)
    return _np_bichromatic(colorings, nbr, full), _np_bichromatic(colorings, faces, full)


def np_first_bichromatic(sets: np.ndarray, n: int) -> int:
    """Smallest mask S with every set bichromatic, or -1.

    A valid S and its complement are both valid; the smaller of the two
    has bit ``n-1`` clear, so only masks below ``2**(n-1)`` are scanned.
    """
    if n == 0:
        return 0 if len(sets) == 0 else -1
    full = np.uint64((1 << n) - 1)
    top = 1 << (n - 1)
    for lo in range(0, top, CHUNK):
        S = np.arange(lo, min(lo + CHUNK, top), dtype=np.uint64)
        ok = _np_bichromatic(S, sets, full)
        hit = np.flatnonzero(ok)
        if hit.size:
            return int(S[hit[0]])
    return -1


def np_min_hitting(sets: np.ndarray, n: int) -> int:
    """Smallest-cardinality mask meeting every set; ties go to the smaller mask."""
    best_k, best = n + 1, -1
    for lo in range(0, 1 << n, CHUNK):
        S = np.arange(lo, min(lo + CHUNK, 1 << n), dtype=np.uint64)
        ok = _np_hits(S, sets)
        if not ok.any():
            continue
        cand = S[ok]
        k = np.bitwise_count(cand)
        j = int(np.argmin(k))
        if int(k[j]) < best_k:
            best_k, best = int(k[j]), int(cand[j])
    return best


# -- numba path ----------------------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def _nb_audit_batch(colorings, nbr, faces, full):
        k = colorings.shape[0]
        dom = np.ones(k, dtype=np.bool_)
        poly = np.ones(k, dtype=np.bool_)
        for i in range(k):
            S = colorings[i]
            T = S ^ full
            for m in nbr:
                if (S & m) == 0 or (T & m) == 0:
                    dom[i] = False
                    break
            for m in faces:
                if (S & m) == 0 or (T & m) == 0:
                    poly[i] = False
                    break
        return dom, poly

    @njit(cache=True)
    def _nb_first_bichromatic(sets, n):
        if n == 0:
            return 0 if sets.shape[0] == 0 else -1
        full = np.uint64((1 << n) - 1)
        top = np.uint64(1) << np.uint64(n - 1)
        S = np.uint64(0)
        while S < top:
            T = S ^ full
            good = True
            for m in sets:
                if (S & m) == 0 or (T & m) == 0:
                    good = False
                    break
            if good:
                return np.int64(S)
            S += np.uint64(1)
        return -1

    @njit(cache=True)
    def _nb_min_hitting(sets, n):
        # Gosper's hack visits each cardinality in increasing numeric order
        one = np.uint64(1)
        limit = one << np.uint64(n)
        for k in range(n + 1):
            if k == 0:
                if sets.shape[0] == 0:
                    return 0
                continue
            S = (one << np.uint64(k)) - one
            while S < limit:
                good = True
                for m in sets:
                    if (S & m) == 0:
                        good = False
                        break
                if good:
                    return np.int64(S)
                c = S & (~S + one)
                r = S + c
                S = (((r ^ S) >> np.uint64(2)) // c) | r
        return -1


def audit_batch(colorings, nbr, faces, full):
    if HAVE_NUMBA:
        return _nb_audit_batch(np.asarray(colorings, dtype=np.uint64), nbr, faces, np.uint64(full))
    return np_audit_batch(colorings, nbr, faces, full)


def first_bichromatic(sets: np.ndarray, n: int) -> int:
    if HAVE_NUMBA:
        return int(_nb_first_bichromatic(sets, n))
    return np_first_bichromatic(sets, n)


def min_hitting(sets: np.ndarray, n: int) -> int:
    if HAVE_NUMBA:
        return int(_nb_min_hitting(sets, n))
    return np_min_hitting(sets, n)
