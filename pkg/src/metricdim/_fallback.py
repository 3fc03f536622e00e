"""Pure-Python/numpy versions of the subset-search kernels.

Same contract as the compiled module: lexicographic order over combinations
of ``pool`` whose first element is one of ``pool[lo:hi]``; 0-based vertex ids.
Combinations are checked in vectorised chunks.
"""

from __future__ import annotations

from itertools import combinations, islice

import numpy as np

CHUNK = 4096


def _combos(pool: np.ndarray, size: int, lo: int, hi: int):
    npool = len(pool)
    for first in range(lo, min(hi, npool - size + 1)):
        for rest in combinations(range(first + 1, npool), size - 1):
            yield (first, *rest)


def _chunks(pool: np.ndarray, size: int, lo: int, hi: int):
    it = _combos(pool, size, lo, hi)
    while True:
        block = list(islice(it, CHUNK))
        if not block:
            return
        yield pool[np.asarray(block, dtype=np.intp).reshape(len(block), size)]


def _has_duplicate_rows(keys: np.ndarray) -> np.ndarray:
    # keys: (nv, B) -> bool (B,) True where some column has a repeated key
    s = np.sort(keys, axis=0)
    return (s[1:] == s[:-1]).any(axis=0)


def first_hit_distinct(D, pool, size, lo, hi, doubly):
    D = np.asarray(D, dtype=np.int64)
    pool = np.asarray(pool, dtype=np.intp)
    diam = int(D.max())
    base = 2 * diam + 1 if doubly else diam + 1
    ncoord = size - 1 if doubly else size
    if float(base) ** ncoord > 4.0e18:
        return _first_hit_tuples(D, pool, size, lo, hi, doubly)
    powers = base ** np.arange(ncoord, dtype=np.int64)
    examined = 0
    for block in _chunks(pool, size, lo, hi):
        cols = D[:, block]  # (nv, B, size)
        if doubly:
            cols = cols[:, :, 1:] - cols[:, :, :1] + diam
        keys = cols @ powers
        bad = _has_duplicate_rows(keys)
        good = np.flatnonzero(~bad)
        if good.size:
            j = int(good[0])
            return tuple(int(x) for x in block[j]), examined + j + 1
        examined += len(block)
    return None, examined


def _first_hit_tuples(D, pool, size, lo, hi, doubly):
    examined = 0
    for combo in _combos(pool, size, lo, hi):
        examined += 1
        q = pool[list(combo)]
        rows = D[:, q]
        if doubly:
            rows = rows[:, 1:] - rows[:, :1]
        if len({tuple(r) for r in rows.tolist()}) == len(rows):
            return tuple(int(x) for x in q), examined
    return None, examined


def first_hit_cover(masks, pool, size, lo, hi):
    """``masks`` is the (rows, words) uint64 bitset matrix used by the compiled kernel."""
    masks = np.asarray(masks, dtype=np.uint64)
    pool = np.asarray(pool, dtype=np.intp)
    nwords = masks.shape[1]
    # unpack to a bool membership table: member[v, row]
    bits = np.unpackbits(masks.view(np.uint8).reshape(masks.shape[0], nwords * 8),
                         axis=1, bitorder="little")
    member = bits.T.astype(bool)
    examined = 0
    for block in _chunks(pool, size, lo, hi):
        covered = member[block].any(axis=1)  # (B, rows)
        ok = covered.all(axis=1)
        good = np.flatnonzero(ok)
        if good.size:
            j = int(good[0])
            return tuple(int(x) for x in block[j]), examined + j + 1
        examined += len(block)
    return None, examined
