"""States (positive normalized linear functionals) on matrix algebras.

A state is either a unit vector xi, acting as a |-> <a xi, xi>, or a density
matrix rho (PSD, trace one), acting as a |-> tr(rho a). The module also hosts
the registry of functional-level inequalities |f(...)| <= ... that the fuzz
campaigns exercise, and the (alpha, beta)-normality estimator.
"""

import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import matcore
from .errors import BadParam, DimensionMismatch, NotPSD, UnknownInequality
from .prng import Stream

VECTOR = "vector"
DENSITY = "density"

VERDICT_TOL = 1e-9  # holds := lhs <= rhs + VERDICT_TOL * max(1, |rhs|)


@dataclass(frozen=True)
class State:
    kind: str
    vector: np.ndarray | None = None
    rho: np.ndarray | None = None

    @property
    def dim(self) -> int:
        return len(self.vector) if self.kind == VECTOR else self.rho.shape[0]


def vector_state(xi) -> State:
    """State from a nonzero vector (normalized here)."""
    xi = np.asarray(xi, dtype=np.complex128).ravel()
    nrm = float(np.linalg.norm(xi))
    if nrm == 0.0 or not np.isfinite(nrm):
        raise ValueError("vector state needs a nonzero finite vector")
    return State(kind=VECTOR, vector=xi / nrm)


def density_state(rho) -> State:
    """State from a density matrix; validates PSD and unit trace."""
    rho = matcore.as_matrix(rho)
    if not matcore.is_hermitian(rho):
        raise ValueError("density matrix must be Hermitian")
    w = matcore.herm_eigvals(rho)
    if w[0] < -1e-12:
        raise NotPSD(f"density matrix has eigenvalue {w[0]:.3e}")
    tr = float(np.trace(rho).real)
    if abs(tr - 1.0) > 1e-12:
        raise ValueError(f"density matrix trace {tr} != 1")
    return State(kind=DENSITY, rho=rho)


def eval_state(f: State, a) -> complex:
    """f(a): <a xi, xi> for vector states, tr(rho a) for density states."""
    a = matcore.as_matrix(a)
    if f.dim != a.shape[0]:
        raise DimensionMismatch(f"state dim {f.dim} vs matrix dim {a.shape[0]}")
    if f.kind == VECTOR:
        return complex(np.vdot(f.vector, a @ f.vector))
    return complex(np.trace(f.rho @ a))


def random_state(dim: int, kind: str, seed: int) -> State:
    """Deterministic random state: Gaussian vector, or G G*/tr(G G*)."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    stream = Stream(seed, stream=dim)
    if kind == VECTOR:
        return vector_state(stream.complex_normals(dim))
    if kind == DENSITY:
        g = stream.complex_normals(dim * dim).reshape(dim, dim)
        rho = g @ g.conj().T
        rho /= np.trace(rho).real
        return State(kind=DENSITY, rho=0.5 * (rho + rho.conj().T))
    raise ValueError(f"unknown state kind {kind!r}")


def state_to_json(f: State) -> dict:
    if f.kind == VECTOR:
        return {
            "kind": VECTOR,
            "dim": f.dim,
            "re": [float(x) for x in f.vector.real],
            "im": [float(x) for x in f.vector.imag],
        }
    obj = matcore.matrix_to_json(f.rho)
    obj["kind"] = DENSITY
    return obj


def state_from_json(obj) -> State:
    if isinstance(obj, str):
        obj = json.loads(obj)
    kind = obj.get("kind")
    if kind == VECTOR:
        re = np.asarray(obj["re"], dtype=np.float64)
        im = np.asarray(obj["im"], dtype=np.float64)
        return vector_state(re + 1j * im)
    if kind == DENSITY:
        return density_state(matcore.matrix_from_json(obj))
    raise ValueError(f"unknown state kind {kind!r}")


# ---------------------------------------------------------------------------
# Functional-level inequality registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    id: str
    lhs: float
    rhs: float
    slack: float
    holds: bool
    params: dict = field(default_factory=dict)


def _fre(f: State, m) -> float:
    """f(m) for Hermitian m: real by positivity of f."""
    return eval_state(f, m).real


def _abs_power(a, r: float) -> np.ndarray:
    """|a|^r via the PSD functional calculus on a*a."""
    g = a.conj().T @ a
    return matcore.psd_power(0.5 * (g + g.conj().T), r / 2.0)


def _absstar_power(a, r: float) -> np.ndarray:
    g = a @ a.conj().T
    return matcore.psd_power(0.5 * (g + g.conj().T), r / 2.0)


def _re_part(m) -> np.ndarray:
    return 0.5 * (m + m.conj().T)


def _f33(inputs, f, r, t):
    a = inputs["a"]
    lhs = abs(eval_state(f, a)) ** r
    rhs = 0.5 * _fre(f, _abs_power(a, r) + _absstar_power(a, r))
    return lhs, rhs


def _f35(inputs, f, r, t):
    a = inputs["a"]
    s = _re_part(a.conj().T @ a)
    tt = _re_part(a @ a.conj().T)
    lhs = abs(eval_state(f, a)) ** (2 * r)
    rhs = _fre(f, t * matcore.matrix_power_int(s, r)
               + (1.0 - t) * matcore.matrix_power_int(tt, r))
    return lhs, rhs


def _f37(inputs, f, r, t):
    a = inputs["a"]
    s = _re_part(a.conj().T @ a)
    tt = _re_part(a @ a.conj().T)
    lhs = abs(eval_state(f, a)) ** 2
    rhs = (0.5 * t * abs(eval_state(f, a @ a))
           + _fre(f, (1.0 - 0.75 * t) * s + 0.25 * t * tt))
    return lhs, rhs


def _f39(inputs, f, r, t):
    a = inputs["a"]
    mean = 0.5 * (_abs_power(a, 1) + _absstar_power(a, 1))
    s = _re_part(a.conj().T @ a)
    lhs = abs(eval_state(f, a)) ** 2
    rhs = _fre(f, t * (mean @ mean) + (1.0 - t) * s)
    return lhs, rhs


def _f311(inputs, f, r, t):
    a = inputs["a"]
    p = _abs_power(a, 1)
    q = _absstar_power(a, 1)
    lhs = abs(eval_state(f, a)) ** 2
    rhs = (0.25 * abs(eval_state(f, p + 1j * q)) ** 2
           + 0.25 * abs(eval_state(f, p @ q))
           + 0.125 * _fre(f, _re_part(a.conj().T @ a) + _re_part(a @ a.conj().T)))
    return lhs, rhs


def _f310(inputs, f, r, t):
    a, b = inputs["a"], inputs["b"]
    lhs = abs(eval_state(f, a @ b))
    rhs = 0.5 * _fre(f, _re_part(a @ a.conj().T) + _re_part(b.conj().T @ b))
    return lhs, rhs


def _f42(inputs, f, r, t):
    a_list = inputs["a_list"]
    n = len(a_list)
    total = np.zeros_like(a_list[0])
    body = np.zeros_like(a_list[0])
    for a in a_list:
        total = total + a
        pr = _abs_power(a, r) @ _absstar_power(a, r)
        s = _re_part(a.conj().T @ a)
        tt = _re_part(a @ a.conj().T)
        body = body + _re_part(pr) + 0.5 * (matcore.matrix_power_int(s, r)
                                            + matcore.matrix_power_int(tt, r))
    lhs = abs(eval_state(f, total)) ** (2 * r)
    rhs = 0.5 * n ** (2 * r - 1) * _fre(f, body)
    return lhs, rhs


def _f43(inputs, f, r, t):
    a_list = inputs["a_list"]
    x_list = inputs["x_list"]
    b_list = inputs["b_list"]
    n = len(a_list)
    total = np.zeros_like(a_list[0])
    body = np.zeros_like(a_list[0], dtype=np.complex128)
    for a, x, b in zip(a_list, x_list, b_list):
        total = total + a.conj().T @ x @ b
        bb = _re_part(b.conj().T @ _abs_power(x, 1) @ b)
        aa = _re_part(a.conj().T @ _absstar_power(x, 1) @ a)
        body = body + (matcore.matrix_power_int(bb, r)
                       + 1j * matcore.matrix_power_int(aa, r))
    lhs = abs(eval_state(f, total)) ** r
    rhs = (n ** (r - 1) / math.sqrt(2.0)) * abs(eval_state(f, body))
    return lhs, rhs


@dataclass(frozen=True)
class _Inequality:
    id: str
    description: str
    slots: tuple[str, ...]
    needs_r: bool
    needs_t: bool
    evaluate: object


FUNCTIONAL_REGISTRY: dict[str, _Inequality] = {
    ineq.id: ineq
    for ineq in (
        _Inequality("F_3_3", "|f(a)|^r <= (1/2) f(|a|^r + |a*|^r)",
                    ("a",), True, False, _f33),
        _Inequality("F_3_5", "|f(a)|^(2r) <= f(t|a|^(2r) + (1-t)|a*|^(2r))",
                    ("a",), True, True, _f35),
        _Inequality("F_3_7", "|f(a)|^2 <= (t/2)|f(a^2)| + f((1-3t/4)a*a + (t/4)aa*)",
                    ("a",), False, True, _f37),
        _Inequality("F_3_9", "|f(a)|^2 <= f(t((|a|+|a*|)/2)^2 + (1-t)|a|^2)",
                    ("a",), False, True, _f39),
        _Inequality("F_3_11", "|f(a)|^2 <= (1/4)|f(|a|+i|a*|)|^2 + (1/4)|f(|a||a*|)|"
                              " + (1/8) f(|a|^2+|a*|^2)",
                    ("a",), False, False, _f311),
        _Inequality("F_3_10_prod", "|f(ab)| <= (1/2) f(aa* + b*b)",
                    ("a", "b"), False, False, _f310),
        _Inequality("F_4_2", "|f(sum a_k)|^(2r) <= (n^(2r-1)/2) f(sum Re(|a_k|^r|a_k*|^r)"
                             " + (1/2) sum(|a_k|^(2r)+|a_k*|^(2r)))",
                    ("a_list",), True, False, _f42),
        _Inequality("F_4_3", "|f(sum a_k* x_k b_k)|^r <= (n^(r-1)/sqrt(2))"
                             " |f(sum((b_k*|x_k|b_k)^r + i(a_k*|x_k*|a_k)^r))|",
                    ("a_list", "x_list", "b_list"), True, False, _f43),
    )
}


def list_functional_inequalities() -> list[tuple[str, str]]:
    return [(ineq.id, ineq.description) for ineq in FUNCTIONAL_REGISTRY.values()]


def functional_check(ineq_id: str, inputs, f: State, r: int = 1,
                     t: float = 1.0) -> Verdict:
    """Evaluate both sides of a registered functional inequality.

    inputs maps slot names (see the registry) to matrices or matrix lists.
    Verdict.holds allows the 1e-9 absolute-relative slack band.
    """
    ineq = FUNCTIONAL_REGISTRY.get(ineq_id)
    if ineq is None:
        raise UnknownInequality(f"no functional inequality {ineq_id!r}")
    if ineq.needs_r and (not isinstance(r, (int, np.integer)) or r < 1):
        raise BadParam(f"{ineq_id} needs an integer r >= 1, got {r!r}")
    if ineq.needs_t and not (0.0 <= t <= 1.0):
        raise BadParam(f"{ineq_id} needs t in [0, 1], got {t!r}")

    clean: dict[str, object] = {}
    for slot in ineq.slots:
        if slot not in inputs:
            raise BadParam(f"{ineq_id} needs input {slot!r}")
        value = inputs[slot]
        if slot.endswith("_list"):
            mats = [matcore.as_matrix(m) for m in value]
            if not mats:
                raise BadParam(f"{ineq_id}: {slot} must be nonempty")
            if any(m.shape != mats[0].shape for m in mats):
                raise DimensionMismatch(f"{ineq_id}: mixed dims in {slot}")
            clean[slot] = mats
        else:
            clean[slot] = matcore.as_matrix(value)
    dims = {m.shape[0] for v in clean.values()
            for m in (v if isinstance(v, list) else [v])}
    if len(dims) != 1:
        raise DimensionMismatch(f"{ineq_id}: mixed matrix dims {sorted(dims)}")
    if f.dim != dims.pop():
        raise DimensionMismatch(f"{ineq_id}: state dim {f.dim} mismatch")
    lists = [v for v in clean.values() if isinstance(v, list)]
    if lists and any(len(v) != len(lists[0]) for v in lists):
        raise DimensionMismatch(f"{ineq_id}: input lists differ in length")

    lhs, rhs = ineq.evaluate(clean, f, int(r), float(t))
    slack = rhs - lhs
    holds = lhs <= rhs + VERDICT_TOL * max(1.0, abs(rhs))
    params = {}
    if ineq.needs_r:
        params["r"] = int(r)
    if ineq.needs_t:
        params["t"] = float(t)
    if lists:
        params["n"] = len(lists[0])
    return Verdict(id=ineq_id, lhs=float(lhs), rhs=float(rhs),
                   slack=float(slack), holds=bool(holds), params=params)


# ---------------------------------------------------------------------------
# (alpha, beta)-normality
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AlphaBetaResult:
    """Extreme constants with alpha^2 f(a*a) <= f(aa*) <= beta^2 f(a*a).

    beta_min is math.inf when no finite beta works; alpha_max is 0 when no
    positive alpha works. The zero element returns (1, 1, True) by convention.
    """

    alpha_max: float
    beta_min: float
    normal_flag: bool


SUPPORT_CUTOFF_REL = 1e-10


def alpha_beta(a, tol: float = 1e-7) -> AlphaBetaResult:
    """Best (alpha, beta) pair from the generalized Rayleigh extremes of
    (aa*, a*a) on the support of a*a, with kernel-leak detection."""
    a = matcore.as_matrix(a)
    s = 0.5 * ((a.conj().T @ a) + (a.conj().T @ a).conj().T)
    t_mat = 0.5 * ((a @ a.conj().T) + (a @ a.conj().T).conj().T)
    es_s = matcore.herm_eig(s)
    scale = float(es_s.eigenvalues[-1])
    if scale <= 0.0:
        return AlphaBetaResult(1.0, 1.0, True)
    cutoff = SUPPORT_CUTOFF_REL * scale

    supp = es_s.eigenvalues > cutoff
    beta_inf = _kernel_leak(es_s, supp, t_mat, cutoff)
    es_t = matcore.herm_eig(t_mat)
    supp_t = es_t.eigenvalues > cutoff
    alpha_zero = _kernel_leak(es_t, supp_t, s, cutoff)

    u = es_s.eigenvectors[:, supp]
    isqrt = u * (es_s.eigenvalues[supp] ** -0.5)
    pencil = isqrt.conj().T @ t_mat @ isqrt
    w = matcore.herm_eigvals(0.5 * (pencil + pencil.conj().T))

    beta = math.inf if beta_inf else max(1.0, math.sqrt(max(float(w[-1]), 0.0)))
    alpha = 0.0 if alpha_zero else min(1.0, math.sqrt(max(float(w[0]), 0.0)))
    normal = (alpha >= 1.0 - tol) and (beta <= 1.0 + tol)
    return AlphaBetaResult(alpha, beta, normal)


def _kernel_leak(es: matcore.HermitianEigenSystem, supp, other, cutoff) -> bool:
    """True when `other` has PSD mass on the kernel complement of `supp`."""
    if supp.all():
        return False
    k = es.eigenvectors[:, ~supp]
    comp = k.conj().T @ other @ k
    w = matcore.herm_eigvals(0.5 * (comp + comp.conj().T))
    return float(w[-1]) > cutoff
