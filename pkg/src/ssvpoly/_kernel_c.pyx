# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled polynomial kernels.

Same API and semantics as ``_kernel_py``.  Multiplication runs on machine
integers through an open-addressing table whenever keys fit in 64 bits and
no coefficient overflows; otherwise it defers to the Python kernel.
"""

from libc.stdlib cimport calloc, free
from libc.stdint cimport uint64_t, int64_t

from . import _kernel_py as _py

cdef extern from *:
    """
    static inline int ssv_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int ssv_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int ssv_mul_ovf(long long a, long long b, long long *r) nogil
    int ssv_add_ovf(long long a, long long b, long long *r) nogil

FIELD_BITS = _py.FIELD_BITS
FIELD_MASK = _py.FIELD_MASK
GUARD = _py.GUARD
BACKEND = "cython"

divides_key = _py.divides_key
add = _py.add
sub = _py.sub

cdef object _U64 = (1 << 64) - 1
cdef object _I64 = (1 << 62)


cdef bint _load(dict d, uint64_t *keys, long long *coeffs):
    cdef Py_ssize_t i = 0
    for k, c in d.items():
        if k > _U64 or c >= _I64 or c <= -_I64:
            return False
        keys[i] = <uint64_t>k
        coeffs[i] = <long long>c
        i += 1
    return True


cdef inline uint64_t _hash(uint64_t x) nogil:
    x ^= x >> 33
    x *= 0xff51afd7ed558ccdULL
    x ^= x >> 33
    return x


def mul(dict a, dict b, eps=0):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j, cap, size
    if na == 0 or nb == 0:
        return {}
    if na * nb < 8 or na * nb > 4000000 or eps > _U64:
        return _py.mul(a, b, eps)
    cdef uint64_t ueps = <uint64_t>eps
    cdef uint64_t *ka = <uint64_t *>calloc(na, sizeof(uint64_t))
    cdef uint64_t *kb = <uint64_t *>calloc(nb, sizeof(uint64_t))
    cdef long long *ca = <long long *>calloc(na, sizeof(long long))
    cdef long long *cb = <long long *>calloc(nb, sizeof(long long))
    cap = 16
    while cap < 2 * na * nb:
        cap <<= 1
    cdef uint64_t mask = cap - 1
    cdef uint64_t *tk = <uint64_t *>calloc(cap, sizeof(uint64_t))
    cdef long long *tc = <long long *>calloc(cap, sizeof(long long))
    cdef char *used = <char *>calloc(cap, sizeof(char))
    cdef bint ok = True
    cdef uint64_t key, h
    cdef long long prod, acc
    cdef dict out
    try:
        if not (ka and kb and ca and cb and tk and tc and used):
            raise MemoryError()
        if not _load(a, ka, ca) or not _load(b, kb, cb):
            return _py.mul(a, b, eps)
        with nogil:
            for i in range(na):
                if not ok:
                    break
                for j in range(nb):
                    key = ka[i] + kb[j]
                    if key < ka[i]:
                        ok = False
                        break
                    if ueps and (key & ueps):
                        key ^= ueps
                    if ssv_mul_ovf(ca[i], cb[j], &prod):
                        ok = False
                        break
                    h = _hash(key) & mask
                    while used[h] and tk[h] != key:
                        h = (h + 1) & mask
                    if used[h]:
                        if ssv_add_ovf(tc[h], prod, &acc):
                            ok = False
                            break
                        tc[h] = acc
                    else:
                        used[h] = 1
                        tk[h] = key
                        tc[h] = prod
        if not ok:
            return _py.mul(a, b, eps)
        out = {}
        for size in range(cap):
            if used[size] and tc[size] != 0:
                out[tk[size]] = tc[size]
        return out
    finally:
        free(ka)
        free(kb)
        free(ca)
        free(cb)
        free(tk)
        free(tc)
        free(used)


def mul_term(dict a, key, coeff, eps=0):
    cdef dict out = {}
    if eps:
        for k, c in a.items():
            k = k + key
            if k & eps:
                k ^= eps
            out[k] = out.get(k, 0) + c * coeff
        return {k: c for k, c in out.items() if c}
    for k, c in a.items():
        out[k + key] = c * coeff
    return out


def divexact(dict f, dict g):
    return _py.divexact(f, g)


def monomial_gcd(polys, shifts):
    cdef uint64_t mins[64]
    cdef int nf = len(shifts), i
    cdef int sh[64]
    cdef uint64_t k, e, key = 0
    if nf > 64:
        return _py.monomial_gcd(polys, shifts)
    for p in polys:
        if 0 in p:
            return 0
    for i in range(nf):
        mins[i] = FIELD_MASK
        sh[i] = shifts[i]
    for p in polys:
        for kk in p:
            if kk > _U64:
                return _py.monomial_gcd(polys, shifts)
            k = kk
            for i in range(nf):
                e = (k >> sh[i]) & FIELD_MASK
                if e < mins[i]:
                    mins[i] = e
    for i in range(nf):
        key |= mins[i] << sh[i]
    return key


def evaluate(dict f, int shift, xi):
    cdef dict out = {}
    cdef dict powers = {}
    cdef long e
    for k, c in f.items():
        e = (k >> shift) & FIELD_MASK
        if e:
            p = powers.get(e)
            if p is None:
                p = xi ** e
                powers[e] = p
            k = k - (e << shift)
            c = c * p
        out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}
