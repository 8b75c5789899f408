"""Pure-Python fallback for the eigensolver kernels.

Implements the same cyclic complex Jacobi iteration as the native extension
(kernels/_native.pyx), with identical constants, update formulas and
convergence rule, so the two backends are interchangeable up to roundoff.

Algorithm: to annihilate the (p, q) entry of a Hermitian matrix H, write
h = H[p,q] = r * e with r = |h| and |e| = 1, take
tau = (H[q,q] - H[p,p]) / (2 r), t = sign(tau) / (|tau| + sqrt(1 + tau^2)),
c = 1/sqrt(1 + t^2), s = t*c, and conjugate H by the plane rotation

    J[p,p] = c        J[p,q] = s * e
    J[q,p] = -s * conj(e)   J[q,q] = c

Sweeps run over all p < q in cyclic order until the off-diagonal Frobenius
mass drops below 1e-14 times the Frobenius norm of the input, with a hard cap
of 100 sweeps.
"""

import math

import numpy as np

from ..errors import NoConvergence

MAX_SWEEPS = 100
OFF_REL_TOL = 1e-14


def _rotate(h, v, p, q):
    hpq = h[p, q]
    r = abs(hpq)
    if r == 0.0:
        return
    tau = (h[q, q].real - h[p, p].real) / (2.0 * r)
    if tau >= 0.0:
        t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
    else:
        t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c
    e = hpq / r
    ec = e.conjugate()

    cp = h[:, p].copy()
    cq = h[:, q].copy()
    h[:, p] = c * cp - s * ec * cq
    h[:, q] = s * e * cp + c * cq
    rp = h[p, :].copy()
    rq = h[q, :].copy()
    h[p, :] = c * rp - s * e * rq
    h[q, :] = s * ec * rp + c * rq
    h[p, q] = 0.0
    h[q, p] = 0.0
    h[p, p] = h[p, p].real
    h[q, q] = h[q, q].real

    if v is not None:
        vp = v[:, p].copy()
        vq = v[:, q].copy()
        v[:, p] = c * vp - s * ec * vq
        v[:, q] = s * e * vp + c * vq


def _off_mass(h):
    return math.sqrt(2.0 * float((np.abs(np.triu(h, 1)) ** 2).sum()))


def _jacobi(h_in, want_vectors):
    h = np.array(h_in, dtype=np.complex128)
    n = h.shape[0]
    v = np.eye(n, dtype=np.complex128) if want_vectors else None
    fro = math.sqrt(float((np.abs(h) ** 2).sum()))
    if fro == 0.0:
        return np.zeros(n), v
    threshold = OFF_REL_TOL * fro
    for _ in range(MAX_SWEEPS):
        if _off_mass(h) <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(h, v, p, q)
    else:
        if _off_mass(h) > threshold:
            raise NoConvergence(f"jacobi did not converge in {MAX_SWEEPS} sweeps")
    return np.real(np.diag(h)).copy(), v


def eigvalsh(h):
    """Ascending eigenvalues of a Hermitian matrix."""
    w, _ = _jacobi(h, want_vectors=False)
    w.sort()
    return w


def eigh(h):
    """Ascending eigenvalues and matching orthonormal eigenvector columns."""
    w, v = _jacobi(h, want_vectors=True)
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def extremes_batch(stack):
    """Smallest and largest eigenvalue of each Hermitian matrix in a stack.

    stack has shape (m, n, n); returns (mins, maxs) of shape (m,).
    """
    stack = np.asarray(stack, dtype=np.complex128)
    m = stack.shape[0]
    mins = np.empty(m)
    maxs = np.empty(m)
    for j in range(m):
        w, _ = _jacobi(stack[j], want_vectors=False)
        mins[j] = w.min()
        maxs[j] = w.max()
    return mins, maxs
