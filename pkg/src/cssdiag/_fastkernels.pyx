# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the enumeration-heavy inner loops.

Single-word variants (vector length <= 64); the dispatcher in
``cssdiag.kernels`` falls back to the pure-Python module for wider vectors.
"""

import numpy as np

cimport numpy as cnp
from libc.stdint cimport int64_t, uint64_t

cnp.import_array()

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


def weight_hist(list gen_rows, int nbits, object shift):
    cdef uint64_t[::1] gens = np.asarray(gen_rows, dtype=np.uint64)
    cdef int k = gens.shape[0]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] hist = np.zeros(nbits + 1, dtype=np.int64)
    cdef int64_t[::1] h = hist
    cdef uint64_t cur = <uint64_t> shift
    cdef uint64_t i, total = (<uint64_t> 1) << k
    h[__builtin_popcountll(cur)] += 1
    with nogil:
        for i in range(1, total):
            cur ^= gens[__builtin_ctzll(i)]
            h[__builtin_popcountll(cur)] += 1
    return hist


def signed_buckets(list codewords, list exps, object mask, int nbuckets):
    cdef uint64_t[::1] cws = np.asarray(codewords, dtype=np.uint64)
    cdef int64_t[::1] es = np.asarray(exps, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] buckets = np.zeros(nbuckets, dtype=np.int64)
    cdef int64_t[::1] b = buckets
    cdef uint64_t m = <uint64_t> mask
    cdef Py_ssize_t i, n = cws.shape[0]
    with nogil:
        for i in range(n):
            if __builtin_popcountll(cws[i] & m) & 1:
                b[es[i]] -= 1
            else:
                b[es[i]] += 1
    return buckets


def weightrule_buckets(list gen_rows, int nbits, object shift, object mask,
                       int c, int nbuckets):
    cdef uint64_t[::1] gens = np.asarray(gen_rows, dtype=np.uint64)
    cdef int k = gens.shape[0]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] buckets = np.zeros(nbuckets, dtype=np.int64)
    cdef int64_t[::1] b = buckets
    cdef uint64_t s = <uint64_t> shift
    cdef uint64_t m = <uint64_t> mask
    cdef uint64_t cur = 0
    cdef uint64_t i, total = (<uint64_t> 1) << k
    cdef int e
    with nogil:
        for i in range(total):
            if i:
                cur ^= gens[__builtin_ctzll(i)]
            e = (c * __builtin_popcountll(cur ^ s)) % nbuckets
            if __builtin_popcountll(cur & m) & 1:
                b[e] -= 1
            else:
                b[e] += 1
    return buckets


cdef inline bint _passes(uint64_t v, uint64_t[::1] member, uint64_t[::1] nonmember) nogil:
    cdef Py_ssize_t i
    for i in range(member.shape[0]):
        if __builtin_popcountll(v & member[i]) & 1:
            return False
    for i in range(nonmember.shape[0]):
        if __builtin_popcountll(v & nonmember[i]) & 1:
            return True
    return False


cdef inline uint64_t _next_mask(uint64_t v) nogil:
    cdef uint64_t low = v & (~v + 1)
    cdef uint64_t ripple = v + low
    return ripple | (((v ^ ripple) >> 2) / low)


cdef uint64_t _binom(int n, int w) nogil:
    cdef uint64_t r = 1
    cdef int i
    for i in range(w):
        r = r * (n - i) // (i + 1)
    return r


def bounded_min_weight(list member_checks, list nonmember_checks, int nbits, int w_max):
    cdef uint64_t[::1] member = np.asarray(member_checks, dtype=np.uint64)
    cdef uint64_t[::1] nonmember = np.asarray(nonmember_checks, dtype=np.uint64)
    cdef int w
    cdef uint64_t v, count, j
    cdef int found = 0
    with nogil:
        for w in range(1, w_max + 1):
            v = ((<uint64_t> 1) << w) - 1
            count = _binom(nbits, w)
            for j in range(count):
                if _passes(v, member, nonmember):
                    found = w
                    break
                v = _next_mask(v)
            if found:
                break
    return found


def bounded_collect(list member_checks, list nonmember_checks, int nbits, int w_max):
    cdef uint64_t[::1] member = np.asarray(member_checks, dtype=np.uint64)
    cdef uint64_t[::1] nonmember = np.asarray(nonmember_checks, dtype=np.uint64)
    cdef int w
    cdef uint64_t v, count, j
    out = []
    for w in range(1, w_max + 1):
        v = ((<uint64_t> 1) << w) - 1
        count = _binom(nbits, w)
        for j in range(count):
            if _passes(v, member, nonmember):
                out.append(int(v))
            v = _next_mask(v)
    return out
