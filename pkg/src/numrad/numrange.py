"""Numerical radius and numerical-range geometry.

The radius is computed as the maximum over unit phases of the top eigenvalue
of Re(phase * a): a fine grid over [0, 2pi) followed by golden-section
refinement of every grid-local maximum that could still hide the global one.
Every evaluation point is feasible, so the estimate never exceeds the true
radius.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import kernels, matcore
from .optimize import golden_min

DEFAULT_RESOLUTION = 1024
DEFAULT_REFINE_TOL = 1e-12
MIN_RESOLUTION = 64
_MAX_REFINE_SITES = 16


def _phase_hermitians(a: np.ndarray, phases: np.ndarray) -> np.ndarray:
    """Stack of Re(mu a) = (mu a + conj(mu) a*)/2 over an array of phases."""
    s = phases[:, None, None] * a
    return 0.5 * (s + np.conj(np.swapaxes(s, -1, -2)))


def _sweep(a: np.ndarray, resolution: int):
    thetas = np.arange(resolution) * (2.0 * np.pi / resolution)
    mins, maxs = kernels.extremes_batch(_phase_hermitians(a, np.exp(1j * thetas)))
    return thetas, mins, maxs


def _extremes_at(a: np.ndarray, theta: float):
    mu = np.array([np.exp(1j * theta)])
    mins, maxs = kernels.extremes_batch(_phase_hermitians(a, mu))
    return float(mins[0]), float(maxs[0])


def _lam_max_at(a: np.ndarray, theta: float) -> float:
    return _extremes_at(a, theta)[1]


def _hnorm_at(a: np.ndarray, theta: float) -> float:
    lo, hi = _extremes_at(a, theta)
    return max(-lo, hi)


def _candidate_sites(values: np.ndarray, margin: float) -> list[int]:
    """Circular grid-local maxima within `margin` of the global grid max.

    Plateau runs collapse to one representative; at most _MAX_REFINE_SITES
    sites are returned, best first.
    """
    n = len(values)
    vmax = float(values.max())
    flags = (values >= np.roll(values, 1)) & (values >= np.roll(values, -1)) \
        & (values >= vmax - margin)
    idx = np.flatnonzero(flags)
    if len(idx) == 0:
        return [int(values.argmax())]
    runs: list[int] = []
    prev = None
    for j in idx:
        if prev is not None and j == prev + 1:
            prev = j
            continue
        runs.append(int(j))
        prev = int(j)
    # circular wrap: first and last run may be the same plateau
    if len(runs) > 1 and runs[0] == 0 and idx[-1] == n - 1:
        runs.pop(0)
    runs.sort(key=lambda j: -values[j])
    return runs[:_MAX_REFINE_SITES]


def _refined_max(a: np.ndarray, thetas, values, refine_tol, evaluate) -> float:
    """Polish grid-local maxima of `evaluate` with golden-section search."""
    best = float(values.max())
    if refine_tol is None or refine_tol <= 0.0:
        return best
    step = float(thetas[1] - thetas[0]) if len(thetas) > 1 else 2.0 * np.pi
    # a cosine-type branch through a sample can exceed it by at most
    # curvature * step^2 / 8; use double that as the candidate margin
    margin = max(best, 0.0) * step * step / 4.0 + 1e-12
    for j in _candidate_sites(values, margin):
        center = float(thetas[j])
        _, neg = golden_min(lambda th: -evaluate(a, th),
                            center - step, center + step, refine_tol)
        if -neg > best:
            best = -neg
    return best


def support_function(a, theta: float) -> float:
    """h(theta): top eigenvalue of Re(e^{-i theta} a); 2pi-periodic."""
    a = matcore.as_matrix(a)
    return _lam_max_at(a, -float(theta))


def numerical_radius(a, resolution: int = DEFAULT_RESOLUTION,
                     refine_tol: float | None = DEFAULT_REFINE_TOL) -> float:
    """max over |mu|=1 of the top eigenvalue of Re(mu a).

    refine_tol is the golden-section bracket width; pass None to return the
    plain grid maximum (then the value is monotone in the resolution).
    """
    a = matcore.as_matrix(a)
    if resolution < MIN_RESOLUTION:
        raise ValueError(f"resolution must be >= {MIN_RESOLUTION}")
    thetas, _, maxs = _sweep(a, resolution)
    return _refined_max(a, thetas, maxs, refine_tol, _lam_max_at)


def radius_via_pm_formula(a, resolution: int = DEFAULT_RESOLUTION,
                          refine_tol: float | None = DEFAULT_REFINE_TOL) -> float:
    """Radius through (1/sqrt 2) max over phases of ||Re(mu a) +/- Im(mu a)||.

    Both signs are swept; Re(mu a) +/- Im(mu a) = Re((1 +/- i) mu a), so each
    sign is a norm sweep of a rescaled element. Agrees with numerical_radius.
    """
    a = matcore.as_matrix(a)
    if resolution < MIN_RESOLUTION:
        raise ValueError(f"resolution must be >= {MIN_RESOLUTION}")
    best = 0.0
    for factor in (1.0 + 1.0j, 1.0 - 1.0j):
        m = factor * a
        thetas, mins, maxs = _sweep(m, resolution)
        norms = np.maximum(-mins, maxs)
        best = max(best, _refined_max(m, thetas, norms, refine_tol, _hnorm_at))
    return best / math.sqrt(2.0)


@dataclass(frozen=True)
class RangeBoundary:
    """Sampled boundary description of the numerical range.

    For each theta, points[k] = <a xi, xi> with xi a top eigenvector of
    Re(e^{-i theta} a), and support_values[k] the matching top eigenvalue.
    When that eigenvalue is degenerate any unit eigenvector is accepted
    (tie-break: the eigensolver's last column), so one boundary
    representative is emitted per direction.
    """

    thetas: np.ndarray
    support_values: np.ndarray
    points: np.ndarray

    def to_csv(self) -> str:
        lines = ["theta,support,re_p,im_p"]
        for th, h, p in zip(self.thetas, self.support_values, self.points):
            lines.append(f"{th:.17g},{h:.17g},{p.real:.17g},{p.imag:.17g}")
        return "\n".join(lines) + "\n"


def range_boundary(a, n_points: int) -> RangeBoundary:
    """Boundary points of V(a) in n_points support directions."""
    a = matcore.as_matrix(a)
    if n_points < 8:
        raise ValueError("n_points must be >= 8")
    thetas = np.arange(n_points) * (2.0 * np.pi / n_points)
    support = np.empty(n_points)
    points = np.empty(n_points, dtype=np.complex128)
    for k, th in enumerate(thetas):
        h = _phase_hermitians(a, np.array([np.exp(-1j * th)]))[0]
        w, v = kernels.eigh(h)
        xi = v[:, -1]
        support[k] = w[-1]
        points[k] = complex(np.vdot(xi, a @ xi))
    return RangeBoundary(thetas=thetas, support_values=support, points=points)


@dataclass(frozen=True)
class EqualityClass:
    """Which radius equality laws hold, with worst-deviation witnesses."""

    v_equals_half_norm: bool
    v_sq_equals_quarter_cross: bool
    v_equals_norm: bool
    witnesses: dict


def _base_deviations(norms: np.ndarray, norm_a: float, cross: float,
                     v: float) -> dict:
    return {
        "v_equals_half_norm": float(np.abs(norms - 0.5 * norm_a).max()),
        "v_sq_equals_quarter_cross": float(np.abs(norms ** 2 - 0.25 * cross).max()),
        "v_equals_norm": abs(v - norm_a),
    }


def equality_class(a, tol: float = 1e-7,
                   resolution: int = DEFAULT_RESOLUTION) -> EqualityClass:
    """Classify the equality cases v = ||a||/2, v^2 = ||a*a+aa*||/4, v = ||a||.

    The first two are the phase-constancy criteria on ||Re(mu a)|| over the
    grid; the +/- combination criterion is evaluated as a cross-check and its
    worst deviations are reported in the witnesses.
    """
    a = matcore.as_matrix(a)
    norm_a = matcore.spectral_norm(a)
    s = a.conj().T @ a
    t = a @ a.conj().T
    cross_mat = 0.5 * ((s + t) + (s + t).conj().T)
    cross = float(kernels.eigvalsh(cross_mat)[-1])

    thetas, mins, maxs = _sweep(a, resolution)
    norms = np.maximum(-mins, maxs)
    v = _refined_max(a, thetas, maxs, DEFAULT_REFINE_TOL, _lam_max_at)
    witnesses = _base_deviations(norms, norm_a, cross, v)

    pm_dev_half = 0.0
    pm_dev_quarter = 0.0
    for factor in (1.0 + 1.0j, 1.0 - 1.0j):
        _, pmins, pmaxs = _sweep(factor * a, resolution)
        pm_norms = np.maximum(-pmins, pmaxs)
        pm_dev_half = max(pm_dev_half,
                          float(np.abs(pm_norms - norm_a / math.sqrt(2.0)).max()))
        pm_dev_quarter = max(pm_dev_quarter,
                             float(np.abs(pm_norms ** 2 - 0.5 * cross).max()))
    witnesses["pm_half_norm"] = pm_dev_half
    witnesses["pm_quarter_cross"] = pm_dev_quarter

    return EqualityClass(
        v_equals_half_norm=witnesses["v_equals_half_norm"] <= tol,
        v_sq_equals_quarter_cross=witnesses["v_sq_equals_quarter_cross"] <= tol,
        v_equals_norm=witnesses["v_equals_norm"] <= tol,
        witnesses=witnesses,
    )
