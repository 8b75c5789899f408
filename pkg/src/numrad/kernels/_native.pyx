# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Native eigensolver kernels: cyclic complex Jacobi for Hermitian matrices.

Mirrors kernels/_pure.py exactly (same rotation formulas, same convergence
rule: off-diagonal Frobenius mass below 1e-14 * ||H||_F, sweep cap 100).
Intended for the small dense matrices this package works with (dim <= ~64).
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport sqrt

from numrad.errors import NoConvergence

cnp.import_array()

ctypedef double complex cplx

cdef int MAX_SWEEPS = 100
cdef double OFF_REL_TOL = 1e-14


cdef double _off2(cplx* h, int n) nogil:
    cdef double acc = 0.0
    cdef int i, j
    for i in range(n - 1):
        for j in range(i + 1, n):
            acc += 2.0 * (h[i * n + j].real * h[i * n + j].real +
                          h[i * n + j].imag * h[i * n + j].imag)
    return acc


cdef int _jacobi(cplx* h, cplx* v, int n, bint want_v) nogil:
    """Diagonalize in place; returns 0 on convergence, 1 on sweep-cap hit."""
    cdef double fro2 = 0.0, thr2, r, tau, t, c, s
    cdef cplx hpq, e, ec, x, y
    cdef int i, p, q, sweep

    for i in range(n * n):
        fro2 += h[i].real * h[i].real + h[i].imag * h[i].imag
    if fro2 == 0.0:
        return 0
    thr2 = OFF_REL_TOL * OFF_REL_TOL * fro2

    for sweep in range(MAX_SWEEPS):
        if _off2(h, n) <= thr2:
            return 0
        for p in range(n - 1):
            for q in range(p + 1, n):
                hpq = h[p * n + q]
                r = sqrt(hpq.real * hpq.real + hpq.imag * hpq.imag)
                if r == 0.0:
                    continue
                tau = (h[q * n + q].real - h[p * n + p].real) / (2.0 * r)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                e = hpq / r
                ec = e.conjugate()

                for i in range(n):
                    x = h[i * n + p]
                    y = h[i * n + q]
                    h[i * n + p] = c * x - s * ec * y
                    h[i * n + q] = s * e * x + c * y
                for i in range(n):
                    x = h[p * n + i]
                    y = h[q * n + i]
                    h[p * n + i] = c * x - s * e * y
                    h[q * n + i] = s * ec * x + c * y
                h[p * n + q] = 0.0
                h[q * n + p] = 0.0
                h[p * n + p] = h[p * n + p].real
                h[q * n + q] = h[q * n + q].real

                if want_v:
                    for i in range(n):
                        x = v[i * n + p]
                        y = v[i * n + q]
                        v[i * n + p] = c * x - s * ec * y
                        v[i * n + q] = s * e * x + c * y

    if _off2(h, n) <= thr2:
        return 0
    return 1


def eigvalsh(h):
    """Ascending eigenvalues of a Hermitian matrix."""
    cdef cnp.ndarray[cplx, ndim=2, mode="c"] arr = np.array(
        h, dtype=np.complex128, order="C")
    cdef int n = arr.shape[0]
    cdef int status
    with nogil:
        status = _jacobi(&arr[0, 0], NULL, n, 0)
    if status:
        raise NoConvergence(f"jacobi did not converge in {MAX_SWEEPS} sweeps")
    w = np.diagonal(arr).real.copy()
    w.sort()
    return w


def eigh(h):
    """Ascending eigenvalues and matching orthonormal eigenvector columns."""
    cdef cnp.ndarray[cplx, ndim=2, mode="c"] arr = np.array(
        h, dtype=np.complex128, order="C")
    cdef int n = arr.shape[0]
    cdef cnp.ndarray[cplx, ndim=2, mode="c"] vec = np.eye(n, dtype=np.complex128)
    cdef int status
    with nogil:
        status = _jacobi(&arr[0, 0], &vec[0, 0], n, 1)
    if status:
        raise NoConvergence(f"jacobi did not converge in {MAX_SWEEPS} sweeps")
    w = np.diagonal(arr).real.copy()
    order = np.argsort(w, kind="stable")
    return w[order], vec[:, order]


def extremes_batch(stack):
    """Smallest and largest eigenvalue of each Hermitian matrix in a stack.

    stack has shape (m, n, n); returns (mins, maxs) of shape (m,).
    """
    cdef cnp.ndarray[cplx, ndim=3, mode="c"] arr = np.array(
        stack, dtype=np.complex128, order="C")
    cdef int m = arr.shape[0]
    cdef int n = arr.shape[1]
    cdef cnp.ndarray[double, ndim=1] mins = np.empty(m)
    cdef cnp.ndarray[double, ndim=1] maxs = np.empty(m)
    cdef int j, i, bad = -1, status
    cdef double lo, hi
    cdef cplx* hj
    with nogil:
        for j in range(m):
            hj = &arr[j, 0, 0]
            status = _jacobi(hj, NULL, n, 0)
            if status:
                bad = j
                break
            lo = hj[0].real
            hi = hj[0].real
            for i in range(1, n):
                if hj[i * n + i].real < lo:
                    lo = hj[i * n + i].real
                if hj[i * n + i].real > hi:
                    hi = hj[i * n + i].real
            mins[j] = lo
            maxs[j] = hi
    if bad >= 0:
        raise NoConvergence(
            f"jacobi did not converge in {MAX_SWEEPS} sweeps (batch item {bad})")
    return mins, maxs
