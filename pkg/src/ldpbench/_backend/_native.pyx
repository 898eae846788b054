# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernel backend.

Scalar-loop mirror of ``_pykernels``: identical stream positions, identical
float64 arithmetic, bit-identical outputs.  All hot loops run under
``nogil`` so the experiment engine's worker threads execute in parallel.
"""

import numpy as np

from libc.stdint cimport int64_t, uint8_t, uint64_t

BACKEND_NAME = "native"

cdef uint64_t GOLDEN = <uint64_t>0x9E3779B97F4A7C15
cdef double TWO_NEG53 = 1.0 / 9007199254740992.0


cdef inline uint64_t mix64(uint64_t x) noexcept nogil:
    x ^= x >> 30
    x *= <uint64_t>0xBF58476D1CE4E5B9
    x ^= x >> 27
    x *= <uint64_t>0x94D049BB133111EB
    x ^= x >> 31
    return x


cdef inline uint64_t draw_u64(uint64_t key, uint64_t counter) noexcept nogil:
    return mix64(key + (counter + 1) * GOLDEN)


cdef inline double draw_f64(uint64_t key, uint64_t counter) noexcept nogil:
    return <double>(draw_u64(key, counter) >> 11) * TWO_NEG53


def grr_perturb(values, int64_t d, double p_keep, key, base):
    """Direct randomized response over domain indices."""
    cdef const int64_t[::1] vals = np.ascontiguousarray(values, dtype=np.int64)
    cdef uint64_t k = key, b = base
    cdef Py_ssize_t n = vals.shape[0], j
    cdef int64_t v, r
    cdef double u
    out_arr = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    with nogil:
        for j in range(n):
            v = vals[j]
            u = draw_f64(k, b + 2 * <uint64_t>j)
            if u < p_keep:
                out[j] = v
            else:
                r = <int64_t>(draw_f64(k, b + 2 * <uint64_t>j + 1) * (d - 1))
                out[j] = r + (r >= v)
    return out_arr


def ue_perturb(values, int64_t d, double p_one, double q_one, key, base):
    """Bitwise-perturbed one-hot encodings, packed little-endian per row."""
    cdef const int64_t[::1] vals = np.ascontiguousarray(values, dtype=np.int64)
    cdef uint64_t kk = key, b = base, cbase
    cdef Py_ssize_t n = vals.shape[0], j
    cdef int64_t v, i
    cdef double u, p
    out_arr = np.zeros((n, (d + 7) // 8), dtype=np.uint8)
    cdef uint8_t[:, ::1] out = out_arr
    with nogil:
        for j in range(n):
            v = vals[j]
            cbase = b + <uint64_t>j * <uint64_t>d
            for i in range(d):
                u = draw_f64(kk, cbase + <uint64_t>i)
                p = p_one if i == v else q_one
                if u < p:
                    out[j, i >> 3] |= <uint8_t>(1 << (i & 7))
    return out_arr


def ue_support(packed, int64_t d):
    """Column sums of the packed bit matrix."""
    cdef const uint8_t[:, ::1] rows = np.ascontiguousarray(packed, dtype=np.uint8)
    cdef Py_ssize_t n = rows.shape[0], j
    cdef int64_t i
    counts_arr = np.zeros(d, dtype=np.int64)
    cdef int64_t[::1] counts = counts_arr
    with nogil:
        for j in range(n):
            for i in range(d):
                if rows[j, i >> 3] & <uint8_t>(1 << (i & 7)):
                    counts[i] += 1
    return counts_arr


def lh_perturb(values, int64_t g, double p_keep, key, base):
    """Hash each value into [0, g), randomize the symbol, report (seed, symbol)."""
    cdef const int64_t[::1] vals = np.ascontiguousarray(values, dtype=np.int64)
    cdef uint64_t kk = key, b = base, c, seed
    cdef Py_ssize_t n = vals.shape[0], j
    cdef int64_t x, y, r
    cdef double u
    seeds_arr = np.empty(n, dtype=np.uint64)
    symbols_arr = np.empty(n, dtype=np.int64)
    cdef uint64_t[::1] seeds = seeds_arr
    cdef int64_t[::1] symbols = symbols_arr
    with nogil:
        for j in range(n):
            c = b + 3 * <uint64_t>j
            seed = draw_u64(kk, c)
            x = <int64_t>(mix64(seed + (<uint64_t>vals[j] + 1) * GOLDEN) % <uint64_t>g)
            u = draw_f64(kk, c + 1)
            if u < p_keep:
                y = x
            else:
                r = <int64_t>(draw_f64(kk, c + 2) * (g - 1))
                y = r + (r >= x)
            seeds[j] = seed
            symbols[j] = y
    return seeds_arr, symbols_arr


def lh_support(seeds, symbols, int64_t d, int64_t g):
    """For each candidate value, count reports whose symbol matches its hash."""
    cdef const uint64_t[::1] sd = np.ascontiguousarray(seeds, dtype=np.uint64)
    cdef const int64_t[::1] sym = np.ascontiguousarray(symbols, dtype=np.int64)
    cdef Py_ssize_t n = sd.shape[0], j
    cdef int64_t v, y
    cdef uint64_t seed
    counts_arr = np.zeros(d, dtype=np.int64)
    cdef int64_t[::1] counts = counts_arr
    with nogil:
        for j in range(n):
            seed = sd[j]
            y = sym[j]
            for v in range(d):
                if <int64_t>(mix64(seed + (<uint64_t>v + 1) * GOLDEN) % <uint64_t>g) == y:
                    counts[v] += 1
    return counts_arr


def ss_perturb(values, int64_t d, int64_t k, double include_prob, key, base):
    """Size-k subsets biased to contain the true value; rows sorted."""
    cdef const int64_t[::1] vals = np.ascontiguousarray(values, dtype=np.int64)
    cdef uint64_t kk = key, b = base, c
    cdef Py_ssize_t n = vals.shape[0], j
    cdef int64_t pool_size = d - 1, draws = 1 + k
    cdef int64_t v, m, i, t, r, idx, tmp, a, bb, item
    cdef bint include
    out_arr = np.empty((n, k), dtype=np.int64)
    pool_arr = np.empty(pool_size, dtype=np.int64)
    cdef int64_t[:, ::1] out = out_arr
    cdef int64_t[::1] pool = pool_arr
    with nogil:
        for j in range(n):
            v = vals[j]
            c = b + <uint64_t>j * <uint64_t>draws
            include = draw_f64(kk, c) < include_prob
            m = k - 1 if include else k
            for i in range(pool_size):
                pool[i] = i + (i >= v)
            # partial Fisher-Yates; unused trailing draw positions are
            # reserved regardless so every user consumes 1+k counters
            for t in range(m):
                r = <int64_t>(draw_f64(kk, c + 1 + <uint64_t>t) * (pool_size - t))
                idx = t + r
                tmp = pool[t]
                pool[t] = pool[idx]
                pool[idx] = tmp
            if include:
                out[j, 0] = v
                for t in range(m):
                    out[j, 1 + t] = pool[t]
            else:
                for t in range(k):
                    out[j, t] = pool[t]
            for a in range(1, k):
                item = out[j, a]
                bb = a - 1
                while bb >= 0 and out[j, bb] > item:
                    out[j, bb + 1] = out[j, bb]
                    bb -= 1
                out[j, bb + 1] = item
    return out_arr
