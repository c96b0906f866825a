# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled int64 kernels with exact overflow detection.

Same contract as ``bihom._pykernels``: an OverflowError means the caller must
fall back to arbitrary-precision integers.
"""
import numpy as np
from libc.stdint cimport int64_t

cdef extern from *:
    """
    static inline int bh_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int bh_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    bint bh_mul_ovf(long long a, long long b, long long *r) nogil
    bint bh_add_ovf(long long a, long long b, long long *r) nogil


def linear_apply(const int64_t[:, :] m, const int64_t[:, :] x):
    cdef Py_ssize_t d = m.shape[0], n = m.shape[1], batch = x.shape[1]
    cdef Py_ssize_t r, c, b
    cdef long long acc, term, a
    cdef bint bad = False
    out = np.zeros((d, batch), dtype=np.int64)
    cdef int64_t[:, ::1] o = out
    with nogil:
        for r in range(d):
            for c in range(n):
                a = m[r, c]
                if a == 0:
                    continue
                for b in range(batch):
                    if bh_mul_ovf(a, x[c, b], &term) or bh_add_ovf(o[r, b], term, &acc):
                        bad = True
                        break
                    o[r, b] = acc
                if bad:
                    break
            if bad:
                break
    if bad:
        raise OverflowError("linear_apply overflowed int64")
    return out


def multilinear_apply(const int64_t[:, :] idx, const int64_t[:] vals, const int64_t[:, :, :] xs, Py_ssize_t dim):
    cdef Py_ssize_t nnz = vals.shape[0], k = xs.shape[0], batch = xs.shape[2]
    cdef Py_ssize_t e, s, b, outi
    cdef long long term, acc
    cdef bint bad = False
    out = np.zeros((dim, batch), dtype=np.int64)
    cdef int64_t[:, ::1] o = out
    with nogil:
        for e in range(nnz):
            outi = idx[e, 0]
            for b in range(batch):
                term = vals[e]
                for s in range(k):
                    if bh_mul_ovf(term, xs[s, idx[e, s + 1], b], &term):
                        bad = True
                        break
                    if term == 0:
                        break
                if bad:
                    break
                if term == 0:
                    continue
                if bh_add_ovf(o[outi, b], term, &acc):
                    bad = True
                    break
                o[outi, b] = acc
            if bad:
                break
    if bad:
        raise OverflowError("multilinear_apply overflowed int64")
    return out
