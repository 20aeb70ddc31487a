# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Gray-code enumeration kernels (compiled core).

One site flips per step, so the running pattern sums update in O(M) and the
quadratic form in O(k). A numpy fallback with identical signatures lives in
``py_backend``; ``kernels/__init__`` picks whichever imports.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport exp

cnp.import_array()


def gibbs_enumerate(const signed char[:, ::1] xi, double beta, int k):
    """Sweep all 2^N spin configurations of the quadratic-overlap Hamiltonian.

    Returns ``(max_logw, total, buckets)`` where ``total`` is the Kahan sum of
    ``exp(logw - max_logw)`` over configurations, and ``buckets[w]`` restricts
    that sum to configurations whose first k sites spell the word ``w``
    (site j -> bit j, spin +1 -> bit 1). log-weight = beta/(2N) * ||sum_i
    sigma_i xi_i||^2.
    """
    cdef Py_ssize_t N = xi.shape[0]
    cdef Py_ssize_t M = xi.shape[1]
    cdef unsigned long long n_cfg = (<unsigned long long> 1) << N
    cdef unsigned long long i, word
    cdef Py_ssize_t j, m
    cdef double coef = beta / (2.0 * N)
    cdef double logw, maxlw, term, y, t, c_total, total, ss

    sigma_arr = np.full(N, -1, dtype=np.int8)
    s_arr = -np.sum(np.asarray(xi), axis=0).astype(np.int64)
    buckets_arr = np.zeros(1 << k, dtype=np.float64)
    comp_arr = np.zeros(1 << k, dtype=np.float64)

    cdef signed char[::1] sigma = sigma_arr
    cdef long long[::1] s = s_arr
    cdef double[::1] buckets = buckets_arr
    cdef double[::1] comp = comp_arr
    cdef long long[::1] s0 = s_arr.copy()

    # pass 1: max log-weight
    with nogil:
        ss = 0.0
        for m in range(M):
            ss += <double> (s[m] * s[m])
        maxlw = coef * ss
        for i in range(1, n_cfg):
            j = 0
            while not (i >> j) & 1:
                j += 1
            sigma[j] = -sigma[j]
            for m in range(M):
                s[m] += 2 * sigma[j] * xi[j, m]
            ss = 0.0
            for m in range(M):
                ss += <double> (s[m] * s[m])
            logw = coef * ss
            if logw > maxlw:
                maxlw = logw

    # pass 2: Kahan-compensated accumulation of exp(logw - maxlw)
    for m in range(M):
        s[m] = s0[m]
    sigma_arr[:] = -1
    with nogil:
        total = 0.0
        c_total = 0.0
        word = 0
        ss = 0.0
        for m in range(M):
            ss += <double> (s[m] * s[m])
        term = exp(coef * ss - maxlw)
        total = term
        buckets[0] = term
        for i in range(1, n_cfg):
            j = 0
            while not (i >> j) & 1:
                j += 1
            sigma[j] = -sigma[j]
            for m in range(M):
                s[m] += 2 * sigma[j] * xi[j, m]
            if j < k:
                word ^= (<unsigned long long> 1) << j
            ss = 0.0
            for m in range(M):
                ss += <double> (s[m] * s[m])
            term = exp(coef * ss - maxlw)
            y = term - c_total
            t = total + y
            c_total = (t - total) - y
            total = t
            y = term - comp[word]
            t = buckets[word] + y
            comp[word] = (t - buckets[word]) - y
            buckets[word] = t

    return maxlw, total, buckets_arr


def quadform_values(const double[:, ::1] a):
    """All 2^k values of sigma^T A sigma - tr(A) over Rademacher sigma.

    Values are returned in Gray-code visit order (the order is irrelevant for
    distributional use).
    """
    cdef Py_ssize_t k = a.shape[0]
    cdef unsigned long long n_cfg = (<unsigned long long> 1) << k
    cdef unsigned long long i
    cdef Py_ssize_t j, m
    cdef double q, tr

    a_np = np.asarray(a)
    sigma_arr = np.full(k, -1, dtype=np.int8)
    v_arr = -np.sum(a_np, axis=1)
    out_arr = np.empty(n_cfg, dtype=np.float64)

    cdef signed char[::1] sigma = sigma_arr
    cdef double[::1] v = v_arr
    cdef double[::1] out = out_arr

    tr = np.trace(a_np)
    q = float(np.sum(a_np))
    with nogil:
        out[0] = q - tr
        for i in range(1, n_cfg):
            j = 0
            while not (i >> j) & 1:
                j += 1
            # old sigma[j], old v: q' = q - 4 sigma_j (A sigma)_j + 4 A_jj
            q += -4.0 * sigma[j] * v[j] + 4.0 * a[j, j]
            sigma[j] = -sigma[j]
            for m in range(k):
                v[m] += 2.0 * sigma[j] * a[m, j]
            out[i] = q - tr
    return out_arr


def mixture_table(const double[::1] weights, const double[:, ::1] prob_plus):
    """Accumulate sum_n weights[n] * prod_{j<k} Bernoulli(prob_plus[n, j])(bit_j)
    into a 2^k table (site j -> bit j).
    """
    cdef Py_ssize_t n = prob_plus.shape[0]
    cdef Py_ssize_t k = prob_plus.shape[1]
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << k
    cdef Py_ssize_t node, j, t, half
    cdef double p, w

    table_arr = np.zeros(size, dtype=np.float64)
    work_arr = np.empty(size, dtype=np.float64)
    cdef double[::1] table = table_arr
    cdef double[::1] work = work_arr

    with nogil:
        for node in range(n):
            w = weights[node]
            work[0] = 1.0
            half = 1
            for j in range(k):
                p = prob_plus[node, j]
                for t in range(half):
                    work[t + half] = work[t] * p
                    work[t] = work[t] * (1.0 - p)
                half <<= 1
            for t in range(size):
                table[t] += w * work[t]
    return table_arr
