# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled nested Kleene iterations; same API as ``_kernels_py``.

Masks are 64-bit, so callers must keep the state count at most 63.
"""

ctypedef unsigned long long mask_t

MAX_STATES = 63
cdef enum:
    MAX_LEVELS = 64


cdef inline mask_t _full(int n) nogil:
    return ((<mask_t>1) << n) - 1


cdef inline mask_t _pre(int p, int n, mask_t ys) nogil:
    cdef int last = n - 1
    return ((ys >> 1) & (((<mask_t>1) << last) - 1)) | (((ys >> p) & 1) << last)


cdef mask_t _eventually(int p, int n, mask_t xs) nogil:
    cdef mask_t ys = 0, nxt
    while True:
        nxt = xs | _pre(p, n, ys)
        if nxt == ys:
            return ys
        ys = nxt


cdef mask_t _always(int p, int n, mask_t xs) nogil:
    cdef mask_t ys = _full(n), nxt
    while True:
        nxt = xs & _pre(p, n, ys)
        if nxt == ys:
            return ys
        ys = nxt


cdef mask_t _weak_until(int p, int n, mask_t red, mask_t xs) nogil:
    cdef mask_t blue = _full(n) & ~red
    cdef mask_t after = red & _pre(p, n, xs)
    cdef mask_t ys = _full(n), nxt
    while True:
        nxt = (blue & _pre(p, n, ys)) | after
        if nxt == ys:
            return ys
        ys = nxt


cdef mask_t _strong_until(int p, int n, mask_t red, mask_t xs) nogil:
    cdef mask_t blue = _full(n) & ~red
    cdef mask_t after = red & _pre(p, n, xs)
    cdef mask_t ys = 0, nxt
    while True:
        nxt = (blue & _pre(p, n, ys)) | after
        if nxt == ys:
            return ys
        ys = nxt


cpdef mask_t pre(int p, int n, mask_t ys):
    return _pre(p, n, ys)


cpdef mask_t eventually_mask(int p, int n, mask_t xs):
    return _eventually(p, n, xs)


cpdef mask_t always_mask(int p, int n, mask_t xs):
    return _always(p, n, xs)


cpdef mask_t weak_until_mask(int p, int n, mask_t red, mask_t xs):
    return _weak_until(p, n, red, xs)


cpdef mask_t strong_until_mask(int p, int n, mask_t red, mask_t xs):
    return _strong_until(p, n, red, xs)


cpdef mask_t mu_w_mask(int p, int n, mask_t red):
    cdef mask_t xs = 0, nxt
    while True:
        nxt = _weak_until(p, n, red, xs)
        if nxt == xs:
            return xs
        xs = nxt


cpdef mask_t nu_u_mask(int p, int n, mask_t red):
    cdef mask_t xs = _full(n), nxt
    while True:
        nxt = _strong_until(p, n, red, xs)
        if nxt == xs:
            return xs
        xs = nxt


cpdef mask_t atmost_mask(int p, int n, mask_t red, int k):
    cdef mask_t full = _full(n)
    cdef mask_t blue = full & ~red
    cdef mask_t levels[MAX_LEVELS + 1]
    cdef mask_t nxt
    cdef bint changed = True
    cdef int j
    if k <= 0:
        return 0
    if k > MAX_LEVELS:
        raise ValueError(f"at most {MAX_LEVELS} levels, got {k}")
    levels[0] = 0
    for j in range(1, k + 1):
        levels[j] = full
    while changed:
        changed = False
        for j in range(1, k + 1):
            nxt = (blue & _pre(p, n, levels[j])) | (red & _pre(p, n, levels[j - 1]))
            if nxt != levels[j]:
                levels[j] = nxt
                changed = True
    return levels[k]


cpdef mask_t fiter_mask(int p, int n, mask_t red, int k):
    cdef mask_t xs = 0, nxt
    cdef int i
    for i in range(k):
        nxt = _weak_until(p, n, red, xs)
        if nxt == xs:
            break
        xs = nxt
    return xs
