"""Deterministic matrix generators for the structural classes the bounds
distinguish: generic, Hermitian, normal, square-zero, nilpotent, diagonal
function samples, and elements with prescribed (alpha, beta)-normality.

Every generator is a pure function of its GenSpec; randomness comes from the
counter-based stream in numrad.prng keyed by (kind, dim) and the spec seed.
"""

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BadSpec
from .prng import Stream, fold

KINDS = ("ginibre", "hermitian", "normal", "square_zero",
         "upper_nilpotent", "diagonal_sample", "alpha_beta_target")

DEFAULT_SAMPLE_POINTS = 21


@dataclass(frozen=True)
class GenSpec:
    kind: str
    dim: int
    seed: int
    params: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"kind": self.kind, "dim": self.dim, "seed": self.seed,
                "params": _params_to_json(self.params)}

    @staticmethod
    def from_json(obj) -> "GenSpec":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            return GenSpec(kind=str(obj["kind"]), dim=int(obj["dim"]),
                           seed=int(obj.get("seed", 0)),
                           params=_params_from_json(obj.get("params", {})))
        except (KeyError, TypeError, ValueError) as exc:
            raise BadSpec(f"malformed GenSpec JSON: {exc}") from exc


def _params_to_json(params: dict) -> dict:
    out = {}
    for key, val in params.items():
        if key in ("samples", "coeffs"):
            out[key] = [[float(np.real(z)), float(np.imag(z))] for z in val]
        else:
            out[key] = val
    return out


def _params_from_json(params: dict) -> dict:
    out = {}
    for key, val in params.items():
        if key in ("samples", "coeffs"):
            out[key] = [complex(p[0], p[1]) for p in val]
        else:
            out[key] = val
    return out


def sample_grid(n: int) -> np.ndarray:
    """n equispaced sample points on [-1, 1], endpoints included."""
    if n == 1:
        return np.array([1.0])
    return np.linspace(-1.0, 1.0, n)


def _stream_for(spec: GenSpec) -> Stream:
    return Stream(spec.seed, fold(KINDS.index(spec.kind), spec.dim))


def _complex_matrix(stream: Stream, rows: int, cols: int) -> np.ndarray:
    return stream.complex_normals(rows * cols).reshape(rows, cols)


def _orthonormalize(g: np.ndarray) -> np.ndarray:
    """Modified Gram-Schmidt with positive real diagonal scaling.

    Deterministic unitary from a generic complex square matrix; falls back to
    canonical basis vectors on (measure-zero) rank deficiency.
    """
    n = g.shape[0]
    q = np.array(g, dtype=np.complex128)
    for k in range(n):
        for j in range(k):
            q[:, k] -= np.vdot(q[:, j], q[:, k]) * q[:, j]
        nrm = float(np.linalg.norm(q[:, k]))
        if nrm < 1e-12:
            q[:, k] = 0.0
            q[k, k] = 1.0
            for j in range(k):
                q[:, k] -= np.vdot(q[:, j], q[:, k]) * q[:, j]
            nrm = float(np.linalg.norm(q[:, k]))
        q[:, k] /= nrm
    return q


def feasible_beta_range(alpha: float, dim: int) -> tuple[float, float]:
    """Admissible beta targets for alpha_beta_target at this dimension.

    The pencil eigenvalue product is 1, so dim 2 forces beta = 1/alpha and
    dim n allows beta in [alpha^(-1/(n-1)), alpha^(-(n-1))].
    """
    if not (0.0 < alpha <= 1.0):
        raise BadSpec("alpha target must be in (0, 1]")
    if dim <= 1:
        return (1.0, 1.0)
    if dim == 2:
        return (1.0 / alpha, 1.0 / alpha)
    return (alpha ** (-1.0 / (dim - 1)), alpha ** (-(dim - 1)))


def _alpha_beta_target(spec: GenSpec, stream: Stream) -> np.ndarray:
    n = spec.dim
    alpha = float(spec.params.get("alpha", 1.0))
    if not (0.0 < alpha <= 1.0):
        raise BadSpec(f"alpha target {alpha} outside (0, 1]")
    lo, hi = feasible_beta_range(alpha, n)
    beta = float(spec.params.get("beta", lo))
    if beta < 1.0:
        raise BadSpec(f"beta target {beta} below 1")
    if n == 1:
        if abs(alpha - 1.0) > 0.05 or abs(beta - 1.0) > 0.05:
            raise BadSpec("dim 1 elements are normal; targets must be (1, 1)")
        return np.array([[stream.complex_normals(1)[0]]])
    if n == 2:
        if abs(beta - 1.0 / alpha) > 0.05:
            raise BadSpec(f"dim 2 forces beta = 1/alpha = {1.0/alpha:.4f}")
        ratios = [1.0 / alpha ** 2, alpha ** 2]
    else:
        if not (lo - 1e-9 <= beta <= hi + 1e-9):
            raise BadSpec(f"beta target {beta} outside feasible "
                          f"[{lo:.4f}, {hi:.4f}] at dim {n}")
        g = (alpha * alpha * beta * beta) ** (-1.0 / (n - 2))
        ratios = [beta ** 2, alpha ** 2] + [g] * (n - 2)
    d2 = np.empty(n)
    d2[0] = 1.0
    for j in range(n - 1):
        d2[j + 1] = d2[j] / ratios[j]
    d2 /= d2.max()  # keep the profile O(1)
    perm = np.zeros((n, n), dtype=np.complex128)
    for j in range(n):
        perm[(j + 1) % n, j] = 1.0
    core = np.diag(np.sqrt(d2)).astype(np.complex128) @ perm
    w = _orthonormalize(_complex_matrix(stream, n, n))
    scale = math.exp(stream.uniform(math.log(0.5), math.log(2.0)))
    return scale * (w @ core @ w.conj().T)


def _diagonal_sample(spec: GenSpec, stream: Stream) -> np.ndarray:
    n = spec.dim
    params = spec.params
    if "samples" in params:
        samples = np.asarray([complex(z) for z in params["samples"]])
        if len(samples) != n:
            raise BadSpec(f"{len(samples)} samples for dim {n}")
        return np.diag(samples)
    if "coeffs" in params:
        coeffs = [complex(z) for z in params["coeffs"]]
    else:
        coeffs = list(stream.complex_normals(4))
    grid = sample_grid(n)
    values = np.zeros(n, dtype=np.complex128)
    for j, c in enumerate(coeffs):
        values += c * grid ** j
    return np.diag(values)


def generate(spec: GenSpec) -> np.ndarray:
    """Materialize a GenSpec into a dim x dim complex matrix."""
    if spec.kind not in KINDS:
        raise BadSpec(f"unknown generator kind {spec.kind!r}")
    if spec.dim < 1:
        raise BadSpec("dim must be >= 1")
    n = spec.dim
    stream = _stream_for(spec)

    if spec.kind == "ginibre":
        return _complex_matrix(stream, n, n)
    if spec.kind == "hermitian":
        g = _complex_matrix(stream, n, n)
        return 0.5 * (g + g.conj().T)
    if spec.kind == "normal":
        u = _orthonormalize(_complex_matrix(stream, n, n))
        d = stream.complex_normals(n)
        return (u * d) @ u.conj().T
    if spec.kind == "square_zero":
        a = np.zeros((n, n), dtype=np.complex128)
        m = n // 2
        if m >= 1:
            a[:m, m:] = _complex_matrix(stream, m, n - m)
        return a
    if spec.kind == "upper_nilpotent":
        return np.triu(_complex_matrix(stream, n, n), 1)
    if spec.kind == "diagonal_sample":
        return _diagonal_sample(spec, stream)
    return _alpha_beta_target(spec, stream)
