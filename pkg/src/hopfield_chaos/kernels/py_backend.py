"""Numpy fallback for the enumeration kernels.

Chunked vectorized sweeps matching the compiled ``_gray`` signatures exactly.
Slower by one to two orders of magnitude; fine up to N around 20.
"""

import numpy as np

_CHUNK = 1 << 14


def _sign_chunk(start, stop, n_sites):
    """Spin matrix (chunk, n_sites) for configuration indices [start, stop)."""
    idx = np.arange(start, stop, dtype=np.uint64)
    bits = (idx[:, None] >> np.arange(n_sites, dtype=np.uint64)[None, :]) & 1
    return 2.0 * bits - 1.0


def gibbs_enumerate(xi, beta, k):
    """See ``_gray.gibbs_enumerate``; plain binary order instead of Gray code."""
    xi = np.asarray(xi, dtype=np.float64)
    n_sites = xi.shape[0]
    n_cfg = 1 << n_sites
    coef = beta / (2.0 * n_sites)

    maxlw = -np.inf
    for start in range(0, n_cfg, _CHUNK):
        stop = min(start + _CHUNK, n_cfg)
        s = _sign_chunk(start, stop, n_sites) @ xi
        logw = coef * np.einsum("ij,ij->i", s, s)
        maxlw = max(maxlw, float(logw.max()))

    total = 0.0
    buckets = np.zeros(1 << k, dtype=np.float64)
    word_mask = (1 << k) - 1
    for start in range(0, n_cfg, _CHUNK):
        stop = min(start + _CHUNK, n_cfg)
        s = _sign_chunk(start, stop, n_sites) @ xi
        logw = coef * np.einsum("ij,ij->i", s, s)
        terms = np.exp(logw - maxlw)
        total += float(terms.sum())
        words = np.arange(start, stop, dtype=np.int64) & word_mask
        np.add.at(buckets, words, terms)
    return maxlw, total, buckets


def quadform_values(a):
    """All 2^k values of sigma^T A sigma - tr(A), binary index order."""
    a = np.asarray(a, dtype=np.float64)
    k = a.shape[0]
    n_cfg = 1 << k
    tr = np.trace(a)
    out = np.empty(n_cfg, dtype=np.float64)
    for start in range(0, n_cfg, _CHUNK):
        stop = min(start + _CHUNK, n_cfg)
        sig = _sign_chunk(start, stop, k)
        out[start:stop] = np.einsum("ij,jk,ik->i", sig, a, sig) - tr
    return out


def mixture_table(weights, prob_plus):
    """See ``_gray.mixture_table``."""
    weights = np.asarray(weights, dtype=np.float64)
    prob_plus = np.asarray(prob_plus, dtype=np.float64)
    n, k = prob_plus.shape
    table = np.zeros(1 << k, dtype=np.float64)
    # keep chunk * 2^k work arrays around 2^22 doubles
    chunk = max(1, (1 << 22) >> k)
    for start in range(0, n, chunk):
        stop = min(start + chunk, n)
        t = np.ones((stop - start, 1), dtype=np.float64)
        for j in range(k):
            p = prob_plus[start:stop, j : j + 1]
            t = np.concatenate([t * (1.0 - p), t * p], axis=1)
        table += weights[start:stop] @ t
    return table
