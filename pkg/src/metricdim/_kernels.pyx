# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset-search kernels.

Both kernels walk the size-``size`` combinations of ``pool`` in lexicographic
order, restricted to combinations whose first element is ``pool[lo:hi]``, and
return the first passing combination (as pool values) plus the number of
combinations examined.  Vertex ids are 0-based here.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t, uint64_t
from libc.stdlib cimport malloc, free, qsort

cnp.import_array()

cdef double STAMP_LIMIT = 4194304.0


cdef int _cmp_i64(const void* a, const void* b) noexcept nogil:
    cdef int64_t x = (<int64_t*>a)[0]
    cdef int64_t y = (<int64_t*>b)[0]
    return (x > y) - (x < y)


cdef inline bint _next_combo(int* idx, int size, int npool) noexcept nogil:
    cdef int i = size - 1
    cdef int j
    while i >= 0 and idx[i] == npool - size + i:
        i -= 1
    if i < 0:
        return False
    idx[i] += 1
    for j in range(i + 1, size):
        idx[j] = idx[j - 1] + 1
    return True


def first_hit_distinct(const int32_t[:, ::1] D, const int32_t[::1] pool, int size,
                       int lo, int hi, bint doubly):
    """First combination whose representation (or shifted representation) is injective."""
    cdef int nv = D.shape[0]
    cdef int npool = pool.shape[0]
    cdef int diam = 0
    cdef int a, b
    for a in range(nv):
        for b in range(nv):
            if D[a, b] > diam:
                diam = D[a, b]
    cdef int ncoord = size - 1 if doubly else size
    cdef int64_t base = 2 * diam + 1 if doubly else diam + 1
    cdef int64_t shift = diam if doubly else 0
    # key space must fit in int64 with headroom
    cdef double space = float(base) ** ncoord
    if space > 4.0e18:
        raise OverflowError("key space too large for compiled kernel")
    cdef bint use_stamp = space <= STAMP_LIMIT
    cdef int64_t tsize = <int64_t>space if use_stamp else 1

    hi = min(hi, npool - size + 1)
    if size < 1 or lo >= hi:
        return None, 0

    cdef cnp.ndarray[int32_t, ndim=1] stamp_arr = np.zeros(tsize, dtype=np.int32)
    cdef int32_t* stamp = <int32_t*>stamp_arr.data
    cdef int64_t* keys = <int64_t*>malloc(nv * sizeof(int64_t))
    cdef int* idx = <int*>malloc(size * sizeof(int))
    cdef int* q = <int*>malloc(size * sizeof(int))
    cdef int32_t epoch = 0
    cdef int64_t examined = 0
    cdef int64_t key, mult
    cdef int i, v, c0
    cdef bint ok = False, more = True
    try:
        with nogil:
            for i in range(size):
                idx[i] = lo + i
            while more:
                if idx[0] >= hi:
                    break
                examined += 1
                for i in range(size):
                    q[i] = pool[idx[i]]
                ok = True
                if use_stamp:
                    epoch += 1
                    if epoch == 2147483647:
                        for i in range(tsize):
                            stamp[i] = 0
                        epoch = 1
                for v in range(nv):
                    key = 0
                    mult = 1
                    if doubly:
                        c0 = D[v, q[0]]
                        for i in range(1, size):
                            key += (D[v, q[i]] - c0 + shift) * mult
                            mult *= base
                    else:
                        for i in range(size):
                            key += D[v, q[i]] * mult
                            mult *= base
                    if use_stamp:
                        if stamp[key] == epoch:
                            ok = False
                            break
                        stamp[key] = epoch
                    else:
                        keys[v] = key
                if ok and not use_stamp:
                    qsort(keys, nv, sizeof(int64_t), _cmp_i64)
                    for v in range(1, nv):
                        if keys[v] == keys[v - 1]:
                            ok = False
                            break
                if ok:
                    break
                more = _next_combo(idx, size, npool)
        if ok and idx[0] < hi:
            return tuple(int(pool[idx[i]]) for i in range(size)), examined
        return None, examined
    finally:
        free(keys)
        free(idx)
        free(q)


def first_hit_cover(const uint64_t[:, ::1] masks, const int32_t[::1] pool, int size,
                    int lo, int hi):
    """First combination meeting every row of ``masks`` (rows are vertex bitsets)."""
    cdef int nrows = masks.shape[0]
    cdef int nwords = masks.shape[1]
    cdef int npool = pool.shape[0]
    hi = min(hi, npool - size + 1)
    if size < 1 or lo >= hi:
        return None, 0
    cdef uint64_t* qmask = <uint64_t*>malloc(nwords * sizeof(uint64_t))
    cdef int* idx = <int*>malloc(size * sizeof(int))
    cdef int64_t examined = 0
    cdef int i, r, w, v
    cdef bint ok = False, more = True, hit
    try:
        with nogil:
            for i in range(size):
                idx[i] = lo + i
            while more:
                if idx[0] >= hi:
                    break
                examined += 1
                for w in range(nwords):
                    qmask[w] = 0
                for i in range(size):
                    v = pool[idx[i]]
                    qmask[v >> 6] |= (<uint64_t>1) << (v & 63)
                ok = True
                for r in range(nrows):
                    hit = False
                    for w in range(nwords):
                        if masks[r, w] & qmask[w]:
                            hit = True
                            break
                    if not hit:
                        ok = False
                        break
                if ok:
                    break
                more = _next_combo(idx, size, npool)
        if ok and idx[0] < hi:
            return tuple(int(pool[idx[i]]) for i in range(size)), examined
        return None, examined
    finally:
        free(qmask)
        free(idx)
