# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled table kernels; behavior matches bckbench._kernels_py bit for bit."""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

import array
from itertools import permutations

_perm_cache = {}


cdef int _violation_c(const int* t, int n, int* w) noexcept nogil:
    # Returns the law id (see bckbench.core.LAWS) or 0; witness goes into w.
    cdef int a, b, x, y, z, xy
    for a in range(n):
        if t[a * n] != a:
            w[0] = a
            return 2
    for b in range(n):
        if t[b] != 0:
            w[0] = b
            return 3
    for a in range(n):
        if t[a * n + a] != 0:
            w[0] = a
            return 5
    for x in range(n):
        for y in range(n):
            xy = t[x * n + y]
            for z in range(n):
                if t[t[xy * n + t[x * n + z]] * n + t[z * n + y]] != 0:
                    w[0] = x
                    w[1] = y
                    w[2] = z
                    return 1
    for a in range(n):
        for b in range(a + 1, n):
            if t[a * n + b] == 0 and t[b * n + a] == 0:
                w[0] = a
                w[1] = b
                return 4
    for x in range(n):
        for y in range(n):
            if t[t[x * n + t[x * n + y]] * n + y] != 0:
                w[0] = x
                w[1] = y
                return 6
    for x in range(n):
        for y in range(n):
            xy = t[x * n + y]
            for z in range(n):
                if t[xy * n + z] != t[t[x * n + z] * n + y]:
                    w[0] = x
                    w[1] = y
                    w[2] = z
                    return 7
    return 0


cdef int* _to_buf(object table, int n) except NULL:
    cdef int* t = <int*> malloc(n * n * sizeof(int))
    cdef int i
    if t == NULL:
        raise MemoryError()
    try:
        for i in range(n * n):
            t[i] = table[i]
    except Exception:
        free(t)
        raise
    return t


_WITNESS_LEN = {1: 3, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 3}


def violation(table, int n):
    """First failed law of a complete table, as (law_id, witness), else None."""
    cdef int w[3]
    cdef int* t = _to_buf(table, n)
    cdef int code
    try:
        code = _violation_c(t, n, w)
    finally:
        free(t)
    if code == 0:
        return None
    return (code, tuple(w[i] for i in range(_WITNESS_LEN[code])))


cdef bint _lex_less(const int* a, const int* b, int m) noexcept nogil:
    cdef int i
    for i in range(m):
        if a[i] != b[i]:
            return a[i] < b[i]
    return False


def canonical(table, int n):
    """Lexicographically least relabelling over all permutations fixing 0."""
    perms = _perm_cache.get(n)
    if perms is None:
        perms = array.array(
            "i", [v for p in permutations(range(1, n)) for v in (0,) + p]
        )
        _perm_cache[n] = perms
    cdef int[::1] pv = perms
    cdef int nperm = len(perms) // n
    cdef int* t = _to_buf(table, n)
    cdef int* best = <int*> malloc(n * n * sizeof(int))
    cdef int* cand = <int*> malloc(n * n * sizeof(int))
    cdef int k, a, b, base
    cdef bint first = True
    if best == NULL or cand == NULL:
        free(t)
        if best != NULL:
            free(best)
        if cand != NULL:
            free(cand)
        raise MemoryError()
    try:
        with nogil:
            for k in range(nperm):
                base = k * n
                for a in range(n):
                    for b in range(n):
                        cand[pv[base + a] * n + pv[base + b]] = pv[base + t[a * n + b]]
                if first or _lex_less(cand, best, n * n):
                    memcpy(best, cand, n * n * sizeof(int))
                    first = False
        return tuple(best[k] for k in range(n * n))
    finally:
        free(t)
        free(best)
        free(cand)


cdef bint _ax1_ok(const int* t, int n, int x, int y, int z) noexcept nogil:
    cdef int xy, xz, d, zy, r
    xy = t[x * n + y]
    if xy < 0:
        return True
    xz = t[x * n + z]
    if xz < 0:
        return True
    d = t[xy * n + xz]
    if d < 0:
        return True
    zy = t[z * n + y]
    if zy < 0:
        return True
    r = t[d * n + zy]
    return r <= 0


cdef bint _ok(const int* t, int n, int a, int b, int v) noexcept nogil:
    cdef int z, w, aw, lhs, rhs, av
    if v == 0 and t[b * n + a] == 0:
        return False
    for z in range(n):
        if not _ax1_ok(t, n, a, b, z):
            return False
        if not _ax1_ok(t, n, a, z, b):
            return False
        if not _ax1_ok(t, n, z, b, a):
            return False
    for w in range(n):
        aw = t[a * n + w]
        if aw < 0:
            continue
        lhs = t[v * n + w]
        rhs = t[aw * n + b]
        if lhs >= 0 and rhs >= 0 and lhs != rhs:
            return False
    av = t[a * n + v]
    if av >= 0 and t[av * n + b] > 0:
        return False
    return True


cdef void _rec(int* t, int n, const int* ca, const int* cb, int ncells,
               int depth, int pin, list out):
    # Cell (a, b) ranges over order-compatible values only: 0..a when a < b,
    # 1..a when a > b (see the pure-Python twin for the argument).
    cdef int a, b, i, v, lo, hi
    cdef int w[3]
    if depth == ncells:
        if _violation_c(t, n, w) == 0:
            out.append(tuple(t[i] for i in range(n * n)))
        return
    a = ca[depth]
    b = cb[depth]
    i = a * n + b
    lo = 0 if a < b else 1
    hi = a + 1
    if depth == 0 and pin >= 0:
        if pin < lo or pin >= hi:
            return
        lo = pin
        hi = pin + 1
    for v in range(lo, hi):
        t[i] = v
        if _ok(t, n, a, b, v):
            _rec(t, n, ca, cb, ncells, depth + 1, pin, out)
    t[i] = -1


def search(int n, int pin=-1):
    """Valid tables of size n covering every isomorphism class, as flat
    tuples; restricted to order-compatible labelings exactly like the
    pure-Python twin.

    `pin`, when >= 0, fixes the value of the first open cell so the search
    tree can be split across workers.
    """
    if n < 1:
        raise ValueError("size must be at least 1")
    cdef int* t = <int*> malloc(n * n * sizeof(int))
    cdef int* ca = <int*> malloc(n * n * sizeof(int))
    cdef int* cb = <int*> malloc(n * n * sizeof(int))
    cdef int a, b, i, ncells
    cdef int w[3]
    if t == NULL or ca == NULL or cb == NULL:
        if t != NULL:
            free(t)
        if ca != NULL:
            free(ca)
        if cb != NULL:
            free(cb)
        raise MemoryError()
    out = []
    try:
        for i in range(n * n):
            t[i] = -1
        for a in range(n):
            t[a * n] = a
            t[a * n + a] = 0
            t[a] = 0
        ncells = 0
        for a in range(1, n):
            for b in range(1, n):
                if a != b:
                    ca[ncells] = a
                    cb[ncells] = b
                    ncells += 1
        if ncells == 0:
            if _violation_c(t, n, w) == 0:
                out.append(tuple(t[i] for i in range(n * n)))
            return out
        _rec(t, n, ca, cb, ncells, 0, pin, out)
        return out
    finally:
        free(t)
        free(ca)
        free(cb)
