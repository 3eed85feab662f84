# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled MLP kernels.

Fused dense forward/backward over flat float64 parameter vectors, matrix
products via BLAS dgemm. Contract and parameter layout are identical to
``backend_numpy``; ``tnb.nn.backend`` picks whichever is importable.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport tanh as ctanh
from scipy.linalg.cython_blas cimport dgemm

cnp.import_array()

ACT_TANH = 0
ACT_RELU = 1


cdef void _gemm_nn(int m, int k, int n, double alpha, double* a, double* b,
                   double beta, double* c) noexcept nogil:
    # row-major C(m,n) = alpha*A(m,k)@B(k,n) + beta*C
    cdef char cn = 78  # 'N'
    dgemm(&cn, &cn, &n, &m, &k, &alpha, b, &n, a, &k, &beta, c, &n)


cdef void _gemm_tn(int m, int k, int n, double alpha, double* a, double* b,
                   double beta, double* c) noexcept nogil:
    # row-major C(m,n) = alpha*A.T@B + beta*C with A stored (k,m) row-major
    cdef char cn = 78
    cdef char ct = 84  # 'T'
    dgemm(&cn, &ct, &n, &m, &k, &alpha, b, &n, a, &m, &beta, c, &n)


cdef void _gemm_nt(int m, int k, int n, double alpha, double* a, double* b,
                   double beta, double* c) noexcept nogil:
    # row-major C(m,n) = alpha*A(m,k)@B.T + beta*C with B stored (n,k) row-major
    cdef char cn = 78
    cdef char ct = 84
    dgemm(&ct, &cn, &n, &m, &k, &alpha, b, &k, a, &k, &beta, c, &n)


def forward(double[::1] params, int[::1] dims, int act_id,
            double[:, ::1] x, bint want_cache=False):
    """Evaluate the network on a batch ``x`` of shape (B, dims[0])."""
    cdef int nlayers = dims.shape[0] - 1
    cdef int nbatch = x.shape[0]
    cdef Py_ssize_t off = 0
    cdef int layer, nin, nout, i, j
    cdef double v
    cdef double[:, ::1] h = x
    cdef double[:, ::1] z

    cache = [np.asarray(x)] if want_cache else None
    if nbatch == 0:
        out = np.empty((0, dims[nlayers]), dtype=np.float64)
        return out, cache

    arr = None
    for layer in range(nlayers):
        nin = dims[layer]
        nout = dims[layer + 1]
        arr = np.empty((nbatch, nout), dtype=np.float64)
        z = arr
        _gemm_nn(nbatch, nin, nout, 1.0, &h[0, 0], &params[off], 0.0, &z[0, 0])
        off += <Py_ssize_t>nin * nout
        with nogil:
            for i in range(nbatch):
                for j in range(nout):
                    v = z[i, j] + params[off + j]
                    if layer < nlayers - 1:
                        if act_id == 0:  # tanh
                            v = ctanh(v)
                        elif v < 0.0:  # relu
                            v = 0.0
                    z[i, j] = v
        off += nout
        h = z
        if want_cache:
            cache.append(arr)
    return arr, cache


def backward(double[::1] params, int[::1] dims, int act_id,
             list cache, double[:, ::1] gout):
    """Reverse-mode pass; returns (grad_params summed over batch, grad_input)."""
    cdef int nlayers = dims.shape[0] - 1
    cdef int nbatch = gout.shape[0]
    cdef int layer, nin, nout, i, j
    cdef double s

    offs = np.empty(nlayers + 1, dtype=np.int64)
    offs[0] = 0
    for layer in range(nlayers):
        offs[layer + 1] = offs[layer] + (dims[layer] + 1) * dims[layer + 1]
    gparams_arr = np.zeros(offs[nlayers], dtype=np.float64)
    cdef double[::1] gparams = gparams_arr
    cdef long long[::1] offsets = offs

    g_arr = np.array(gout, dtype=np.float64, copy=True)
    if nbatch == 0:
        return gparams_arr, np.zeros((0, dims[0]), dtype=np.float64)

    cdef double[:, ::1] g = g_arr
    cdef double[:, ::1] a
    cdef double[:, ::1] gx
    cdef Py_ssize_t off

    for layer in range(nlayers - 1, -1, -1):
        nin = dims[layer]
        nout = dims[layer + 1]
        if layer < nlayers - 1:
            a = cache[layer + 1]
            with nogil:
                for i in range(nbatch):
                    for j in range(nout):
                        if act_id == 0:  # tanh
                            g[i, j] = g[i, j] * (1.0 - a[i, j] * a[i, j])
                        elif a[i, j] <= 0.0:  # relu
                            g[i, j] = 0.0
        off = offsets[layer]
        a = cache[layer]
        # weight gradient: a.T @ g
        _gemm_tn(nin, nbatch, nout, 1.0, &a[0, 0], &g[0, 0], 0.0, &gparams[off])
        # bias gradient: column sums of g
        with nogil:
            for j in range(nout):
                s = 0.0
                for i in range(nbatch):
                    s += g[i, j]
                gparams[off + <Py_ssize_t>nin * nout + j] = s
        # input gradient: g @ W.T
        gx_arr = np.empty((nbatch, nin), dtype=np.float64)
        gx = gx_arr
        _gemm_nt(nbatch, nout, nin, 1.0, &g[0, 0], &params[off], 0.0, &gx[0, 0])
        g_arr = gx_arr
        g = gx
    return gparams_arr, g_arr
