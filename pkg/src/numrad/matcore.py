"""Dense complex matrix algebra and Hermitian spectral machinery.

Matrices are plain numpy arrays of shape (n, n), dtype complex128. Everything
downstream (states, ranges, bounds) is built on the operations here, so the
eigensolver contract is deliberately strict: ascending eigenvalues, orthonormal
eigenvector columns, residuals at the 1e-10 level.
"""

import json
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DimensionMismatch, NonHermitianInput, NotPSD

HERM_REL_TOL = 1e-12   # herm_eig precondition on max-norm asymmetry
PSD_CLAMP_REL = 1e-10  # eigenvalues in [-clamp, 0) are treated as roundoff zeros


@dataclass(frozen=True)
class HermitianEigenSystem:
    """Spectral decomposition of a Hermitian matrix.

    eigenvalues: real, ascending. eigenvectors: unitary matrix whose k-th
    column belongs to eigenvalues[k].
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_matrix(a) -> np.ndarray:
    """Validate and coerce input to a square finite complex128 array."""
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise DimensionMismatch(f"expected a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix entries must be finite")
    return arr


def adjoint(a: np.ndarray) -> np.ndarray:
    return a.conj().T


def is_hermitian(a: np.ndarray, rel_tol: float = HERM_REL_TOL) -> bool:
    a = np.asarray(a)
    scale = max(1.0, float(np.abs(a).max(initial=0.0)))
    return float(np.abs(a - a.conj().T).max(initial=0.0)) <= rel_tol * scale


def herm_eig(h) -> HermitianEigenSystem:
    """Eigen-decomposition of a Hermitian matrix via cyclic Jacobi rotations.

    Raises NonHermitianInput when the asymmetry exceeds 1e-12 relative to the
    max-norm, and NoConvergence if the sweep cap is hit (does not happen for
    the dimensions this package targets).
    """
    h = as_matrix(h)
    if not is_hermitian(h):
        raise NonHermitianInput("input exceeds the Hermitian tolerance")
    h = 0.5 * (h + h.conj().T)  # scrub roundoff asymmetry before iterating
    w, v = kernels.eigh(h)
    return HermitianEigenSystem(eigenvalues=w, eigenvectors=v)


def herm_eigvals(h) -> np.ndarray:
    """Ascending eigenvalues only (cheaper than herm_eig)."""
    h = as_matrix(h)
    if not is_hermitian(h):
        raise NonHermitianInput("input exceeds the Hermitian tolerance")
    return kernels.eigvalsh(0.5 * (h + h.conj().T))


def spectral_norm(a) -> float:
    """Operator norm: the largest singular value."""
    a = as_matrix(a)
    w = kernels.eigvalsh(_gram(a))
    top = float(w[-1])
    return np.sqrt(top) if top > 0.0 else 0.0


def _gram(a: np.ndarray) -> np.ndarray:
    g = a.conj().T @ a
    return 0.5 * (g + g.conj().T)


def psd_power(p, power: float) -> np.ndarray:
    """p-th functional-calculus power of a PSD matrix.

    Eigenvalues in [-1e-10*||P||, 0) are clamped to zero before powering;
    anything lower raises NotPSD.
    """
    p = as_matrix(p)
    if not is_hermitian(p):
        raise NonHermitianInput("psd_power needs a Hermitian input")
    if power <= 0:
        raise ValueError("power must be positive")
    es = herm_eig(p)
    w = es.eigenvalues.copy()
    scale = float(np.abs(w).max(initial=0.0))
    floor = -PSD_CLAMP_REL * scale
    if w[0] < floor:
        raise NotPSD(f"eigenvalue {w[0]:.3e} below the clamp band {floor:.3e}")
    w[w < 0.0] = 0.0
    u = es.eigenvectors
    return (u * (w ** power)) @ u.conj().T


def cartesian_parts(a) -> tuple[np.ndarray, np.ndarray]:
    """Hermitian pair (re, im) with a = re + 1j*im."""
    a = as_matrix(a)
    return 0.5 * (a + a.conj().T), (a - a.conj().T) / 2j


def abs_parts(a) -> tuple[np.ndarray, np.ndarray]:
    """(|a|, |a*|): PSD square roots of a*a and aa*."""
    a = as_matrix(a)
    astar = a.conj().T
    return psd_power(_herm(astar @ a), 0.5), psd_power(_herm(a @ astar), 0.5)


def _herm(m: np.ndarray) -> np.ndarray:
    return 0.5 * (m + m.conj().T)


def matrix_power_int(a: np.ndarray, k: int) -> np.ndarray:
    """a^k for integer k >= 0 by repeated multiplication."""
    if k < 0:
        raise ValueError("negative powers not supported")
    out = np.eye(a.shape[0], dtype=np.complex128)
    base = np.asarray(a, dtype=np.complex128)
    while k:
        if k & 1:
            out = out @ base
        base = base @ base
        k >>= 1
    return out


def matrix_to_json(a) -> dict:
    """JSON form: {"dim": n, "re": [[...]], "im": [[...]]}, row-major."""
    a = as_matrix(a)
    return {
        "dim": int(a.shape[0]),
        "re": [[float(x) for x in row] for row in a.real],
        "im": [[float(x) for x in row] for row in a.imag],
    }


def matrix_from_json(obj) -> np.ndarray:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        dim = int(obj["dim"])
        re = np.asarray(obj["re"], dtype=np.float64)
        im = np.asarray(obj["im"], dtype=np.float64)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed matrix JSON: {exc}") from exc
    if re.shape != (dim, dim) or im.shape != (dim, dim):
        raise ValueError(f"matrix JSON shape mismatch for dim={dim}")
    return as_matrix(re + 1j * im)
