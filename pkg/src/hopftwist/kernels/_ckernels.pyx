# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the integer polynomial kernels.

Every routine first tries a 64-bit path with checked arithmetic.  If an
input does not fit in a C ``long long`` or any intermediate overflows,
the call is answered by the pure-Python implementation instead, so the
results are always exact.
"""

from libc.stdlib cimport malloc, calloc, free

from hopftwist.kernels import _pure

cdef extern from *:
    """
    static inline int hk_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int hk_add(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int hk_sub(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int hk_mul(long long a, long long b, long long *r) nogil
    int hk_add(long long a, long long b, long long *r) nogil
    int hk_sub(long long a, long long b, long long *r) nogil


cdef int _load(object seq, long long *dst, Py_ssize_t n) except -1:
    # returns 1 when some entry does not fit in 64 bits
    cdef Py_ssize_t i
    for i in range(n):
        try:
            dst[i] = seq[i]
        except OverflowError:
            return 1
    return 0


cdef int _reduce_c(long long *r, Py_ssize_t n, const long long *phi, Py_ssize_t d) noexcept nogil:
    cdef Py_ssize_t k, i, base
    cdef long long t, p, prod
    for k in range(n - 1, d - 1, -1):
        t = r[k]
        if t == 0:
            continue
        base = k - d
        for i in range(d):
            p = phi[i]
            if p == 0:
                continue
            if hk_mul(t, p, &prod):
                return 1
            if hk_sub(r[base + i], prod, &r[base + i]):
                return 1
    return 0


def poly_reduce(c, phi):
    cdef Py_ssize_t n = len(c)
    cdef Py_ssize_t d = len(phi) - 1
    cdef long long *r
    cdef long long *p
    cdef int bad
    if n <= d:
        return _pure.poly_reduce(c, phi)
    r = <long long *>malloc(n * sizeof(long long))
    p = <long long *>malloc((d + 1) * sizeof(long long))
    try:
        if _load(c, r, n) or _load(phi, p, d + 1):
            return _pure.poly_reduce(c, phi)
        with nogil:
            bad = _reduce_c(r, n, p, d)
        if bad:
            return _pure.poly_reduce(c, phi)
        return [r[i] for i in range(d)]
    finally:
        free(r)
        free(p)


def poly_mulmod(a, b, phi):
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef Py_ssize_t d = len(phi) - 1
    cdef Py_ssize_t n = la + lb - 1
    cdef Py_ssize_t i, j
    cdef long long *ca
    cdef long long *cb
    cdef long long *p
    cdef long long *r
    cdef long long prod
    cdef int bad = 0
    if la == 0 or lb == 0:
        return _pure.poly_mulmod(a, b, phi)
    ca = <long long *>malloc(la * sizeof(long long))
    cb = <long long *>malloc(lb * sizeof(long long))
    p = <long long *>malloc((d + 1) * sizeof(long long))
    r = <long long *>calloc(max(n, d), sizeof(long long))
    try:
        if _load(a, ca, la) or _load(b, cb, lb) or _load(phi, p, d + 1):
            return _pure.poly_mulmod(a, b, phi)
        with nogil:
            for i in range(la):
                if ca[i] == 0:
                    continue
                for j in range(lb):
                    if cb[j] == 0:
                        continue
                    if hk_mul(ca[i], cb[j], &prod) or hk_add(r[i + j], prod, &r[i + j]):
                        bad = 1
                        break
                if bad:
                    break
            if not bad:
                bad = _reduce_c(r, n, p, d)
        if bad:
            return _pure.poly_mulmod(a, b, phi)
        return [r[i] for i in range(d)]
    finally:
        free(ca)
        free(cb)
        free(p)
        free(r)


def matmul(A, B, Py_ssize_t nrows, Py_ssize_t ninner, Py_ssize_t ncols, phi):
    cdef Py_ssize_t d = len(phi) - 1
    cdef Py_ssize_t w = 2 * d - 1
    cdef Py_ssize_t na = nrows * ninner * d, nb = ninner * ncols * d
    cdef Py_ssize_t i, j, k, s, t, ao, bo
    cdef long long *ca
    cdef long long *cb
    cdef long long *p
    cdef long long *acc
    cdef long long *out
    cdef long long x, prod
    cdef int bad = 0
    ca = <long long *>malloc(max(na, 1) * sizeof(long long))
    cb = <long long *>malloc(max(nb, 1) * sizeof(long long))
    p = <long long *>malloc((d + 1) * sizeof(long long))
    acc = <long long *>malloc(max(w, 1) * sizeof(long long))
    out = <long long *>calloc(max(nrows * ncols * d, 1), sizeof(long long))
    try:
        if _load(A, ca, na) or _load(B, cb, nb) or _load(phi, p, d + 1):
            return _pure.matmul(A, B, nrows, ninner, ncols, phi)
        with nogil:
            for i in range(nrows):
                for j in range(ncols):
                    for s in range(w):
                        acc[s] = 0
                    for k in range(ninner):
                        ao = (i * ninner + k) * d
                        bo = (k * ncols + j) * d
                        for s in range(d):
                            x = ca[ao + s]
                            if x == 0:
                                continue
                            for t in range(d):
                                if cb[bo + t] == 0:
                                    continue
                                if hk_mul(x, cb[bo + t], &prod) or hk_add(acc[s + t], prod, &acc[s + t]):
                                    bad = 1
                                    break
                            if bad:
                                break
                        if bad:
                            break
                    if bad:
                        break
                    if _reduce_c(acc, w, p, d):
                        bad = 1
                        break
                    for s in range(d):
                        out[(i * ncols + j) * d + s] = acc[s]
                if bad:
                    break
        if bad:
            return _pure.matmul(A, B, nrows, ninner, ncols, phi)
        return [out[i] for i in range(nrows * ncols * d)]
    finally:
        free(ca)
        free(cb)
        free(p)
        free(acc)
        free(out)
