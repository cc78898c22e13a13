# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled kernels.  Semantics mirror _pykernels exactly."""


def apply_map(const unsigned char[::1] vals, const int[::1] idx_map):
    cdef Py_ssize_t m = idx_map.shape[0]
    cdef bytearray out = bytearray(m)
    cdef unsigned char[::1] o = out
    cdef Py_ssize_t t
    for t in range(m):
        o[t] = vals[idx_map[t]]
    return bytes(out)


def apply_map_add(const unsigned char[::1] vals, const int[::1] idx_map,
                  const unsigned char[::1] add, int k):
    cdef Py_ssize_t m = idx_map.shape[0]
    cdef bytearray out = bytearray(m)
    cdef unsigned char[::1] o = out
    cdef Py_ssize_t t
    for t in range(m):
        o[t] = (vals[idx_map[t]] + add[t]) % k
    return bytes(out)


def min_apply_maps(const unsigned char[::1] vals, idx_maps):
    cdef const int[::1] im
    cdef unsigned char[::1] b = None, c = None
    cdef bytearray best = None, cand = None
    cdef Py_ssize_t length = 0, t
    cdef int verdict
    for obj in idx_maps:
        im = obj
        if best is None:
            length = im.shape[0]
            best = bytearray(length)
            cand = bytearray(length)
            b = best
            c = cand
            for t in range(length):
                b[t] = vals[im[t]]
            continue
        for t in range(length):
            c[t] = vals[im[t]]
        verdict = 0
        for t in range(length):
            if c[t] != b[t]:
                verdict = -1 if c[t] < b[t] else 1
                break
        if verdict < 0:
            best, cand = cand, best
            b, c = c, b
    if best is None:
        return None
    return bytes(best)


def ess_mask(const unsigned char[::1] vals, int k, int n):
    cdef Py_ssize_t size = vals.shape[0]
    cdef Py_ssize_t s = size, base, off, limit
    cdef int var, c, mask = 0
    cdef unsigned char first
    cdef bint essential
    for var in range(n):
        s //= k
        essential = False
        base = 0
        while base < size and not essential:
            limit = base + s
            for off in range(base, limit):
                first = vals[off]
                for c in range(1, k):
                    if vals[off + c * s] != first:
                        essential = True
                        break
                if essential:
                    break
            base += s * k
        if essential:
            mask |= 1 << var
    return mask
