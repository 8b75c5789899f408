"""Catalogue of numerical-radius bounds and the chain verifier.

Every bound is returned as a BoundValue tagged with a stable catalogue id
(e.g. "T1E1", "UB_3_5_min_t", "SUM_4_2"). A bound on the v^p scale carries
params["power"] = p, and the chain verifier compares it against v^p.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels, matcore, numrange, states
from .errors import (BadParam, DimensionMismatch, NotAlphaBetaNormal,
                     NotCommuting, NotSelfAdjoint)
from .optimize import golden_min

SQRT2 = math.sqrt(2.0)

# a violation needs slack below this absolute-relative band
VIOLATION_ABS = 1e-8
VIOLATION_REL = 1e-8


@dataclass(frozen=True)
class BoundValue:
    """One side of a catalogue inequality, evaluated for concrete elements."""

    id: str
    value: float
    kind: str                 # "lower" or "upper"
    anchor: str               # catalogue coordinate of the inequality
    params: dict = field(default_factory=dict)

    @property
    def power(self) -> int:
        return int(self.params.get("power", 1))

    def to_json(self) -> dict:
        params = {key: _json_safe(val) for key, val in self.params.items()}
        return {"id": self.id, "value": self.value, "kind": self.kind,
                "anchor": self.anchor, "params": params}


def _json_safe(val):
    """Strict-JSON stand-ins for the non-finite floats (e.g. beta = inf)."""
    if isinstance(val, float) and not math.isfinite(val):
        return "inf" if val > 0 else "-inf"
    return val


def _hnorm(h: np.ndarray) -> float:
    """Spectral norm of a (near-)Hermitian matrix."""
    h = 0.5 * (h + h.conj().T)
    mins, maxs = kernels.extremes_batch(h[None])
    return max(-float(mins[0]), float(maxs[0]))


def _herm(m: np.ndarray) -> np.ndarray:
    return 0.5 * (m + m.conj().T)


def _re_part(m: np.ndarray) -> np.ndarray:
    return 0.5 * (m + m.conj().T)


def _t_grid_array(t_grid) -> np.ndarray:
    """Accept a point count or an explicit grid of t values in [0, 1]."""
    if isinstance(t_grid, (int, np.integer)):
        if t_grid < 3:
            raise BadParam("t grid needs at least 3 points")
        return np.linspace(0.0, 1.0, int(t_grid))
    ts = np.sort(np.asarray(t_grid, dtype=float))
    if len(ts) < 3 or ts[0] < 0.0 or ts[-1] > 1.0:
        raise BadParam("t grid must hold at least 3 values inside [0, 1]")
    return ts


def _min_affine_norm(m0: np.ndarray, md: np.ndarray, lin: float = 0.0,
                     t_grid=65, tol: float = 1e-10):
    """Minimize lin*t + ||m0 + t*md|| over t in [0, 1].

    The norm of an affine matrix path is convex in t, so a coarse grid scan
    plus golden-section refinement of the best cell is exact.
    """
    ts = _t_grid_array(t_grid)
    stack = m0[None] + ts[:, None, None] * md
    stack = 0.5 * (stack + np.conj(np.swapaxes(stack, -1, -2)))
    mins, maxs = kernels.extremes_batch(stack)
    vals = np.maximum(-mins, maxs) + lin * ts
    k = int(vals.argmin())
    best_t, best_v = float(ts[k]), float(vals[k])

    def f(t: float) -> float:
        return lin * t + _hnorm(m0 + t * md)

    lo = float(ts[max(k - 1, 0)])
    hi = float(ts[min(k + 1, len(ts) - 1)])
    x, fx = golden_min(f, lo, hi, tol)
    if fx < best_v:
        best_t, best_v = float(x), float(fx)
    return best_t, best_v


class _Element:
    """Per-element workspace: spectral data and a shared radius cache."""

    def __init__(self, a: np.ndarray, resolution: int, refine_tol: float):
        self.a = matcore.as_matrix(a)
        self.resolution = resolution
        self.refine_tol = refine_tol
        astar = self.a.conj().T
        self.s = _herm(astar @ self.a)      # a*a
        self.t = _herm(self.a @ astar)      # aa*
        self.es_s = matcore.herm_eig(self.s)
        self.es_t = matcore.herm_eig(self.t)
        self.norm_a = math.sqrt(max(float(self.es_s.eigenvalues[-1]), 0.0))
        self.cross_mat = _herm(self.s + self.t)
        self.cross = float(kernels.eigvalsh(self.cross_mat)[-1])
        re, im = matcore.cartesian_parts(self.a)
        self.re, self.im = re, im
        self.norm_re = _hnorm(re)
        self.norm_im = _hnorm(im)
        self.norm_re_plus_im = _hnorm(re + im)
        self.norm_re_minus_im = _hnorm(re - im)
        self._abs_pow: dict[tuple[str, float], np.ndarray] = {}
        self._radius: dict[str, float] = {}

    def abs_pow(self, r: float) -> np.ndarray:
        """|a|^r from the eigensystem of a*a."""
        return self._pow("s", self.es_s, r)

    def absstar_pow(self, r: float) -> np.ndarray:
        return self._pow("t", self.es_t, r)

    def _pow(self, tag: str, es: matcore.HermitianEigenSystem, r: float):
        key = (tag, float(r))
        if key not in self._abs_pow:
            w = np.clip(es.eigenvalues, 0.0, None) ** (r / 2.0)
            u = es.eigenvectors
            self._abs_pow[key] = (u * w) @ u.conj().T
        return self._abs_pow[key]

    def radius(self, key: str, m: np.ndarray) -> float:
        if key not in self._radius:
            self._radius[key] = numrange.numerical_radius(
                m, self.resolution, self.refine_tol)
        return self._radius[key]

    def sweep_norms(self):
        """Grid of ||Re(e^{i theta} a)|| plus the refined radius, shared."""
        if not hasattr(self, "_sweep_data"):
            thetas, mins, maxs = numrange._sweep(self.a, self.resolution)
            v = numrange._refined_max(self.a, thetas, maxs, self.refine_tol,
                                      numrange._lam_max_at)
            self._sweep_data = (np.maximum(-mins, maxs), v)
            self._radius.setdefault("a", v)
        return self._sweep_data


# ---------------------------------------------------------------------------
# Lower bounds
# ---------------------------------------------------------------------------

def _lower_list(ctx: _Element) -> list[BoundValue]:
    na, nre, nim = ctx.norm_a, ctx.norm_re, ctx.norm_im
    npl, nmi = ctx.norm_re_plus_im, ctx.norm_re_minus_im
    quarter = 0.25 * ctx.cross
    alpha = abs(nre ** 2 - quarter)
    beta = abs(nim ** 2 - quarter)
    mk = lambda id_, val, anchor, **p: BoundValue(
        id=id_, value=float(val), kind="lower", anchor=anchor,
        params={"power": p.pop("power", 1), **p})
    return [
        mk("LB_half_norm", 0.5 * na, "sec 1"),
        mk("T1E1", 0.5 * na + 0.5 * abs(nre - nim), "thm 2.1 (1)"),
        mk("T1E2", 0.5 * na + 0.25 * abs(0.5 * na - nre)
           + 0.25 * abs(0.5 * na - nim), "thm 2.1 (2)"),
        mk("T1E3", 0.5 * na + abs(npl - nmi) / (2.0 * SQRT2), "thm 2.1 (3)"),
        mk("LB_quarter_cross", quarter, "sec 2", power=2),
        mk("T2E1", quarter + 0.5 * abs(nre ** 2 - nim ** 2), "thm 2.5 (1)", power=2),
        mk("T2E2", quarter + 0.25 * abs(npl ** 2 - nmi ** 2), "thm 2.5 (2)", power=2),
        mk("T2E3", quarter + 0.25 * (alpha + beta), "thm 2.5 (3)", power=2),
    ]


def lower_bounds(a) -> list[BoundValue]:
    """All norm-based lower bounds for v(a) (power 1) and v^2(a) (power 2)."""
    ctx = _Element(a, numrange.DEFAULT_RESOLUTION, numrange.DEFAULT_REFINE_TOL)
    return _lower_list(ctx)


def _ab_list(ctx: _Element, alpha: float, beta: float) -> list[BoundValue]:
    inv_b2 = 0.0 if math.isinf(beta) else 1.0 / beta ** 2
    base = 0.25 * max(1.0 + alpha ** 2, 1.0 + inv_b2) * ctx.norm_a ** 2
    quarter = 0.25 * ctx.cross
    nre, nim = ctx.norm_re, ctx.norm_im
    npl, nmi = ctx.norm_re_plus_im, ctx.norm_re_minus_im
    p = {"alpha": alpha, "beta": beta, "power": 2}
    return [
        BoundValue("AB_T2E1", base + 0.5 * abs(nre ** 2 - nim ** 2),
                   "lower", "cor 2.12 (1)", dict(p)),
        BoundValue("AB_T2E2", base + 0.25 * abs(npl ** 2 - nmi ** 2),
                   "lower", "cor 2.12 (2)", dict(p)),
        BoundValue("AB_T2E3", base + 0.25 * (abs(nre ** 2 - quarter)
                                             + abs(nim ** 2 - quarter)),
                   "lower", "cor 2.12 (3)", dict(p)),
    ]


def lower_bound_alpha_beta(a, alpha: float, beta: float) -> list[BoundValue]:
    """The three (alpha, beta)-normal lower bounds for v^2(a).

    The supplied pair must be certified by states.alpha_beta: alpha no larger
    than alpha_max and beta no smaller than beta_min.
    """
    if not (0.0 <= alpha <= 1.0 <= beta):
        raise BadParam("need 0 <= alpha <= 1 <= beta")
    computed = states.alpha_beta(a)
    if alpha > computed.alpha_max + 1e-9 or beta < computed.beta_min - 1e-9:
        raise NotAlphaBetaNormal(
            f"(alpha={alpha}, beta={beta}) not certified; "
            f"measured alpha_max={computed.alpha_max}, beta_min={computed.beta_min}")
    ctx = _Element(a, numrange.DEFAULT_RESOLUTION, numrange.DEFAULT_REFINE_TOL)
    return _ab_list(ctx, alpha, beta)


# ---------------------------------------------------------------------------
# Upper bounds
# ---------------------------------------------------------------------------

def _upper_list(ctx: _Element, r_list, t_grid) -> list[BoundValue]:
    out: list[BoundValue] = []
    mk = lambda id_, val, anchor, **p: BoundValue(
        id=id_, value=float(val), kind="upper", anchor=anchor,
        params={"power": p.pop("power", 1), **p})

    abs_a, abs_astar = ctx.abs_pow(1.0), ctx.absstar_pow(1.0)
    a2 = ctx.a @ ctx.a
    absprod = abs_a @ abs_astar
    abs_i = abs_a + 1j * abs_astar

    for r in r_list:
        r = int(r)
        if r < 1:
            raise BadParam("r_list entries must be integers >= 1")
        val = 0.5 * _hnorm(ctx.abs_pow(r) + ctx.absstar_pow(r))
        if r == 1:
            out.append(mk("UB_3_3_half_abs", val, "thm 3.3", power=1, r=1))
        else:
            out.append(mk(f"UB_3_3_r{r}", val, "thm 3.3", power=r, r=r))

    out.append(mk("UB_3_3_refined",
                  0.5 * ctx.norm_a + 0.5 * math.sqrt(matcore.spectral_norm(a2)),
                  "thm 3.3", power=1))

    for r in r_list:
        r = int(r)
        sp = matcore.matrix_power_int(ctx.s, r)
        tp = matcore.matrix_power_int(ctx.t, r)
        t_min, val = _min_affine_norm(tp, sp - tp, t_grid=t_grid)
        id_ = "UB_3_5_min_t" if r == 1 else f"UB_3_5_min_t_r{r}"
        out.append(mk(id_, val, "thm 3.5", power=2 * r, r=r, t=t_min))

    v_a2 = ctx.radius("a2", a2)
    for id_, m0, md in (
        ("UB_3_7_min_t", ctx.s, 0.25 * ctx.t - 0.75 * ctx.s),
        ("UB_3_7_min_t_swap", ctx.t, 0.25 * ctx.s - 0.75 * ctx.t),
    ):
        t_min, val = _min_affine_norm(m0, md, lin=0.5 * v_a2, t_grid=t_grid)
        out.append(mk(id_, val, "thm 3.7", power=2, t=t_min))
    out.append(mk("UB_3_7_t1", 0.5 * v_a2 + 0.25 * ctx.cross, "thm 3.7", power=2))

    mean = 0.5 * (abs_a + abs_astar)
    q = _herm(mean @ mean)
    for id_, m0 in (("UB_3_9_min_t", ctx.s), ("UB_3_9_min_t_swap", ctx.t)):
        t_min, val = _min_affine_norm(m0, q - m0, t_grid=t_grid)
        out.append(mk(id_, val, "thm 3.9", power=2, t=t_min))
    out.append(mk("UB_3_9_t1_re", 0.5 * _hnorm(_re_part(absprod)) + 0.25 * ctx.cross,
                  "thm 3.9", power=2))
    v_absprod = ctx.radius("absprod", absprod)
    out.append(mk("UB_3_9_t1_v", 0.5 * v_absprod + 0.25 * ctx.cross,
                  "thm 3.9", power=2))

    v_abs_i = ctx.radius("abs_i", abs_i)
    out.append(mk("UB_3_11", 0.25 * v_abs_i ** 2 + 0.25 * v_absprod
                  + 0.125 * ctx.cross, "thm 3.11", power=2))

    t_min, inner = _min_affine_norm(abs_astar, abs_a - abs_astar,
                                    t_grid=t_grid)
    out.append(mk("UB_3_13_min_t", math.sqrt(max(inner, 0.0) * ctx.norm_a),
                  "thm 3.13", power=1, t=t_min))

    for r in r_list:
        r = int(r)
        val = (0.5 * _hnorm(_re_part(ctx.abs_pow(r) @ ctx.absstar_pow(r)))
               + 0.25 * _hnorm(matcore.matrix_power_int(ctx.s, r)
                               + matcore.matrix_power_int(ctx.t, r)))
        id_ = "UB_4_2" if r == 1 else f"UB_4_2_r{r}"
        out.append(mk(id_, val, "thm 4.2 (n=1)", power=2 * r, r=r))

    out.append(mk("UB_4_5", v_abs_i / SQRT2, "cor 4.5", power=1))
    return out


def upper_bounds(a, r_list=(1, 2, 3), t_grid=65,
                 resolution: int = numrange.DEFAULT_RESOLUTION,
                 refine_tol: float = numrange.DEFAULT_REFINE_TOL) -> list[BoundValue]:
    """The full upper-bound catalogue for one element.

    t_grid is either a point count or an explicit grid of t values in [0, 1]
    for the coarse scan of the min-over-t entries; those entries report the
    minimizing t in params["t"]. Each value dominates v(a)**power up to the
    verification band.
    """
    ctx = _Element(a, resolution, refine_tol)
    return _upper_list(ctx, r_list, t_grid)


def reverse_power_bound(a, n: int,
                        resolution: int = numrange.DEFAULT_RESOLUTION,
                        refine_tol: float = numrange.DEFAULT_REFINE_TOL,
                        _ctx: _Element | None = None) -> BoundValue:
    """Reverse power bound: v^n(a) <= v(a^n)/2^(n-1) + sum ||a^k|| ||a||^(n-k)/2^k."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise BadParam("n must be an integer >= 1")
    n = int(n)
    ctx = _ctx if _ctx is not None else _Element(a, resolution, refine_tol)
    an = matcore.matrix_power_int(ctx.a, n)
    value = ctx.radius(f"a^{n}", an) / 2.0 ** (n - 1)
    for k in range(1, n):
        nak = matcore.spectral_norm(matcore.matrix_power_int(ctx.a, k))
        value += nak * ctx.norm_a ** (n - k) / 2.0 ** k
    return BoundValue(f"RP_3_14_n{n}", float(value), "upper", "prop 3.14",
                      {"power": n, "n": n})


# ---------------------------------------------------------------------------
# Multi-element bounds
# ---------------------------------------------------------------------------

def _check_same_dims(*lists):
    dims = {m.shape[0] for lst in lists for m in lst}
    if len(dims) != 1:
        raise DimensionMismatch(f"mixed dims {sorted(dims)}")
    lens = {len(lst) for lst in lists}
    if len(lens) != 1:
        raise DimensionMismatch("input lists differ in length")
    if 0 in lens:
        raise DimensionMismatch("need at least one element")


def sum_bound(a_list, r: int = 1) -> BoundValue:
    """Bound for v^(2r)(sum a_k): (n^(2r-1)/2)(||sum Re(|a_k|^r |a_k*|^r)||
    + (1/2)||sum(|a_k|^(2r) + |a_k*|^(2r))||)."""
    if not isinstance(r, (int, np.integer)) or r < 1:
        raise BadParam("r must be an integer >= 1")
    a_list = [matcore.as_matrix(m) for m in a_list]
    _check_same_dims(a_list)
    n = len(a_list)
    dim = a_list[0].shape[0]
    re_sum = np.zeros((dim, dim), dtype=np.complex128)
    pow_sum = np.zeros((dim, dim), dtype=np.complex128)
    for a in a_list:
        ctx = _Element(a, numrange.DEFAULT_RESOLUTION, None)
        re_sum += _re_part(ctx.abs_pow(r) @ ctx.absstar_pow(r))
        pow_sum += (matcore.matrix_power_int(ctx.s, r)
                    + matcore.matrix_power_int(ctx.t, r))
    value = 0.5 * n ** (2 * r - 1) * (_hnorm(re_sum) + 0.5 * _hnorm(pow_sum))
    return BoundValue("SUM_4_2", float(value), "upper", "thm 4.2",
                      {"power": 2 * int(r), "n": n, "r": int(r)})


def triple_product_bound(a_list, x_list, b_list, r: int = 1,
                         resolution: int = numrange.DEFAULT_RESOLUTION,
                         refine_tol: float = numrange.DEFAULT_REFINE_TOL) -> BoundValue:
    """Bound for v^r(sum a_k* x_k b_k):
    (n^(r-1)/sqrt 2) v(sum((b_k*|x_k|b_k)^r + i(a_k*|x_k*|a_k)^r))."""
    if not isinstance(r, (int, np.integer)) or r < 1:
        raise BadParam("r must be an integer >= 1")
    a_list = [matcore.as_matrix(m) for m in a_list]
    x_list = [matcore.as_matrix(m) for m in x_list]
    b_list = [matcore.as_matrix(m) for m in b_list]
    _check_same_dims(a_list, x_list, b_list)
    n = len(a_list)
    dim = a_list[0].shape[0]
    body = np.zeros((dim, dim), dtype=np.complex128)
    for a, x, b in zip(a_list, x_list, b_list):
        abs_x, abs_xstar = matcore.abs_parts(x)
        bb = _herm(b.conj().T @ abs_x @ b)
        aa = _herm(a.conj().T @ abs_xstar @ a)
        body += (matcore.matrix_power_int(bb, r)
                 + 1j * matcore.matrix_power_int(aa, r))
    value = (n ** (r - 1) / SQRT2) * numrange.numerical_radius(
        body, resolution, refine_tol)
    return BoundValue("PROD_4_3", float(value), "upper", "thm 4.3",
                      {"power": int(r), "n": n, "r": int(r)})


def corollary_product_bound(a_list, b_list, r: int = 1,
                            resolution: int = numrange.DEFAULT_RESOLUTION,
                            refine_tol: float = numrange.DEFAULT_REFINE_TOL) -> BoundValue:
    """x_k = e case: bound for v^r(sum a_k b_k) via |b_k|^(2r) and |a_k*|^(2r)."""
    if not isinstance(r, (int, np.integer)) or r < 1:
        raise BadParam("r must be an integer >= 1")
    a_list = [matcore.as_matrix(m) for m in a_list]
    b_list = [matcore.as_matrix(m) for m in b_list]
    _check_same_dims(a_list, b_list)
    n = len(a_list)
    dim = a_list[0].shape[0]
    body = np.zeros((dim, dim), dtype=np.complex128)
    for a, b in zip(a_list, b_list):
        body += (matcore.matrix_power_int(_herm(b.conj().T @ b), r)
                 + 1j * matcore.matrix_power_int(_herm(a @ a.conj().T), r))
    value = (n ** (r - 1) / SQRT2) * numrange.numerical_radius(
        body, resolution, refine_tol)
    return BoundValue("PROD_4_4", float(value), "upper", "cor 4.4",
                      {"power": int(r), "n": n, "r": int(r)})


def corollary_sum_bound(a_list, r: int = 1,
                        resolution: int = numrange.DEFAULT_RESOLUTION,
                        refine_tol: float = numrange.DEFAULT_REFINE_TOL) -> BoundValue:
    """a_k = b_k = e case: bound for v^r(sum a_k) via |a_k|^r + i |a_k*|^r."""
    if not isinstance(r, (int, np.integer)) or r < 1:
        raise BadParam("r must be an integer >= 1")
    a_list = [matcore.as_matrix(m) for m in a_list]
    _check_same_dims(a_list)
    n = len(a_list)
    dim = a_list[0].shape[0]
    body = np.zeros((dim, dim), dtype=np.complex128)
    for a in a_list:
        ctx = _Element(a, resolution, None)
        body += ctx.abs_pow(r) + 1j * ctx.absstar_pow(r)
    value = (n ** (r - 1) / SQRT2) * numrange.numerical_radius(
        body, resolution, refine_tol)
    return BoundValue("SUM_4_5", float(value), "upper", "cor 4.5",
                      {"power": int(r), "n": n, "r": int(r)})


def two_sum_bound(a, b, resolution: int = numrange.DEFAULT_RESOLUTION,
                  refine_tol: float = numrange.DEFAULT_REFINE_TOL) -> BoundValue:
    """Bound for v^2(a+b): min norm branch + min radius branch + ||a|| ||b||."""
    a = matcore.as_matrix(a)
    b = matcore.as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch("a and b must have equal dims")
    astar, bstar = a.conj().T, b.conj().T
    n1 = _hnorm(astar @ a + bstar @ b)
    n2 = _hnorm(astar @ a + b @ bstar)
    norm_part, norm_branch = min((n1, "a*a+b*b"), (n2, "a*a+bb*"))
    v1 = numrange.numerical_radius(b @ a, resolution, refine_tol)
    v2 = numrange.numerical_radius(bstar @ a, resolution, refine_tol)
    v_part, v_branch = min((v1, "v(ba)"), (v2, "v(b*a)"))
    value = norm_part + v_part + matcore.spectral_norm(a) * matcore.spectral_norm(b)
    return BoundValue("TWOSUM_4_6", float(value), "upper", "thm 4.6",
                      {"power": 2, "norm_branch": norm_branch,
                       "v_branch": v_branch})


def two_sum_selfadjoint_bound(a, b,
                              resolution: int = numrange.DEFAULT_RESOLUTION,
                              refine_tol: float = numrange.DEFAULT_REFINE_TOL) -> BoundValue:
    """Self-adjoint variant: v^2(a+b) <= v^2(a+ib) + v(ba) + ||a|| ||b||."""
    a = matcore.as_matrix(a)
    b = matcore.as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch("a and b must have equal dims")
    if not (matcore.is_hermitian(a) and matcore.is_hermitian(b)):
        raise NotSelfAdjoint("both inputs must be Hermitian within 1e-12")
    v_mix = numrange.numerical_radius(a + 1j * b, resolution, refine_tol)
    v_ba = numrange.numerical_radius(b @ a, resolution, refine_tol)
    value = v_mix ** 2 + v_ba + matcore.spectral_norm(a) * matcore.spectral_norm(b)
    return BoundValue("TWOSUM_4_6_SA", float(value), "upper", "thm 4.6",
                      {"power": 2})


COMMUTE_REL_TOL = 1e-10


def _alpha_gap(m, resolution, refine_tol):
    """(v(m), alpha(m)) with alpha = |  ||Re||^2 - ||Im||^2 | / 2."""
    re, im = matcore.cartesian_parts(m)
    v = numrange.numerical_radius(m, resolution, refine_tol)
    return v, 0.5 * abs(_hnorm(re) ** 2 - _hnorm(im) ** 2)


def commutator_bound(a, b, x=None, y=None, sign: str = "+",
                     resolution: int = numrange.DEFAULT_RESOLUTION,
                     refine_tol: float = numrange.DEFAULT_REFINE_TOL,
                     commuting: bool | None = None) -> list[BoundValue]:
    """Bounds for v(axb +/- bya); x or y of None means the unit.

    Always returns the general COMM_4_7 value. With x = y = e the corollary
    forms for v(ab +/- ba) are appended; with x = e, y = 0 the product forms
    for v(ab) are appended, including the commuting refinements when ab = ba
    (pass commuting=True to require that, raising NotCommuting otherwise).
    """
    a = matcore.as_matrix(a)
    b = matcore.as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch("a and b must have equal dims")
    if sign not in ("+", "-"):
        raise BadParam("sign must be '+' or '-'")
    dim = a.shape[0]
    eye = np.eye(dim, dtype=np.complex128)
    x_mat = eye if x is None else matcore.as_matrix(x)
    y_mat = eye if y is None else matcore.as_matrix(y)
    if x_mat.shape != a.shape or y_mat.shape != a.shape:
        raise DimensionMismatch("x and y must match the dims of a and b")

    cross_a = _hnorm(a.conj().T @ a + a @ a.conj().T)
    cross_b = _hnorm(b.conj().T @ b + b @ b.conj().T)
    norm_a = matcore.spectral_norm(a)
    norm_b = matcore.spectral_norm(b)
    base, branch = min((norm_b * math.sqrt(cross_a), "a"),
                       (norm_a * math.sqrt(cross_b), "b"))
    xy_max = max(matcore.spectral_norm(x_mat), matcore.spectral_norm(y_mat))
    out = [BoundValue("COMM_4_7", float(SQRT2 * base * xy_max), "upper",
                      "thm 4.7", {"power": 1, "sign": sign, "branch": branch})]

    x_is_e = x is None or bool(np.array_equal(x_mat, eye))
    y_is_e = y is None or bool(np.array_equal(y_mat, eye))
    y_is_0 = not np.any(y_mat)
    if not (x_is_e and (y_is_e or y_is_0)):
        if commuting:
            raise NotCommuting("commuting refinement applies to the product case")
        return out

    v_a, alpha_a = _alpha_gap(a, resolution, refine_tol)
    v_b, alpha_b = _alpha_gap(b, resolution, refine_tol)
    refined = min(norm_b * math.sqrt(max(v_a ** 2 - alpha_a, 0.0)),
                  norm_a * math.sqrt(max(v_b ** 2 - alpha_b, 0.0)))
    coarse = min(norm_b * v_a, norm_a * v_b)

    if y_is_e:
        out.append(BoundValue("COR_4_8_refined", float(2 * SQRT2 * refined),
                              "upper", "cor 4.8", {"power": 1, "sign": sign}))
        out.append(BoundValue("COR_4_8_coarse", float(2 * SQRT2 * coarse),
                              "upper", "cor 4.8", {"power": 1, "sign": sign}))
        if commuting:
            raise NotCommuting("commuting refinement applies to the product case")
        return out

    # product case x = e, y = 0: bounds for v(ab)
    out.append(BoundValue("COR_4_9_refined", float(2 * SQRT2 * refined),
                          "upper", "cor 4.9", {"power": 1}))
    out.append(BoundValue("COR_4_9_coarse", float(2 * SQRT2 * coarse),
                          "upper", "cor 4.9", {"power": 1}))
    comm_defect = matcore.spectral_norm(a @ b - b @ a)
    is_commuting = comm_defect <= COMMUTE_REL_TOL * max(norm_a * norm_b, 1e-300)
    if commuting and not is_commuting:
        raise NotCommuting(f"||ab-ba|| = {comm_defect:.3e} exceeds the tolerance")
    if is_commuting:
        out.append(BoundValue("COMM_4_7_commuting", float(base / SQRT2),
                              "upper", "thm 4.7", {"power": 1, "branch": branch}))
        out.append(BoundValue("COR_4_9_commuting_refined", float(SQRT2 * refined),
                              "upper", "cor 4.9", {"power": 1}))
        out.append(BoundValue("COR_4_9_commuting_coarse", float(SQRT2 * coarse),
                              "upper", "cor 4.9", {"power": 1}))
    return out


# ---------------------------------------------------------------------------
# Chain verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChainConfig:
    tol: float = 1e-8
    resolution: int = numrange.DEFAULT_RESOLUTION
    refine_tol: float = numrange.DEFAULT_REFINE_TOL
    r_list: tuple = (1, 2, 3)
    t_grid: int = 65
    reverse_powers: tuple = (2, 3)
    include_alpha_beta: bool = True
    filter_ids: frozenset | None = None


@dataclass(frozen=True)
class ChainReport:
    """Verified chain lower <= v^power <= upper for one element."""

    v: float
    lowers: list
    uppers: list
    violations: list
    equalities: list
    range_flags: dict

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "v": self.v,
            "lowers": [dict(b.to_json(), slack=self.slack(b)) for b in self.lowers],
            "uppers": [dict(b.to_json(), slack=self.slack(b)) for b in self.uppers],
            "violations": list(self.violations),
            "equalities": list(self.equalities),
            "range_flags": dict(self.range_flags),
        }

    def slack(self, bound: BoundValue) -> float:
        target = self.v ** bound.power
        return target - bound.value if bound.kind == "lower" else bound.value - target

    def to_csv(self) -> str:
        lines = ["id,kind,power,value,slack,equality"]
        for b in sorted(self.lowers + self.uppers, key=lambda b: b.id):
            lines.append(f"{b.id},{b.kind},{b.power},{b.value:.17g},"
                         f"{self.slack(b):.17g},{int(b.id in self.equalities)}")
        return "\n".join(lines) + "\n"


LOWER_IDS = ("LB_half_norm", "T1E1", "T1E2", "T1E3",
             "LB_quarter_cross", "T2E1", "T2E2", "T2E3")


def chain_bound_ids(config: ChainConfig = ChainConfig()) -> list[str]:
    """Every bound id verify_chain can emit under this config."""
    ids = list(LOWER_IDS)
    if config.include_alpha_beta:
        ids += ["AB_T2E1", "AB_T2E2", "AB_T2E3"]
    for r in config.r_list:
        ids.append("UB_3_3_half_abs" if r == 1 else f"UB_3_3_r{r}")
        ids.append("UB_3_5_min_t" if r == 1 else f"UB_3_5_min_t_r{r}")
        ids.append("UB_4_2" if r == 1 else f"UB_4_2_r{r}")
    ids += ["UB_3_3_refined", "UB_3_7_min_t", "UB_3_7_min_t_swap", "UB_3_7_t1",
            "UB_3_9_min_t", "UB_3_9_min_t_swap", "UB_3_9_t1_re", "UB_3_9_t1_v",
            "UB_3_11", "UB_3_13_min_t", "UB_4_5", "SUM_4_2"]
    ids += [f"RP_3_14_n{int(n)}" for n in config.reverse_powers]
    return sorted(set(ids))


def verify_chain(a, config: ChainConfig = ChainConfig()) -> ChainReport:
    """Evaluate the whole catalogue against v(a) and report slack structure.

    A bound is a violation when its slack (on the declared power scale) is
    below -(1e-8 + 1e-8 |rhs|); slack within config.tol flags an equality.
    Bounds are sorted by id so concurrent evaluation stays deterministic.
    """
    ctx = _Element(a, config.resolution, config.refine_tol)
    norms, v = ctx.sweep_norms()

    lowers = _lower_list(ctx)
    if config.include_alpha_beta:
        ab = states.alpha_beta(ctx.a)
        lowers += _ab_list(ctx, ab.alpha_max, ab.beta_min)
    uppers = _upper_list(ctx, config.r_list, config.t_grid)
    for n in config.reverse_powers:
        uppers.append(reverse_power_bound(ctx.a, n, _ctx=ctx))
    uppers.append(sum_bound([ctx.a], r=1))

    if config.filter_ids is not None:
        keep = config.filter_ids
        lowers = [b for b in lowers if b.id in keep]
        uppers = [b for b in uppers if b.id in keep]

    lowers.sort(key=lambda b: b.id)
    uppers.sort(key=lambda b: b.id)

    violations = []
    equalities = []
    for b in lowers + uppers:
        target = v ** b.power
        slack = (target - b.value) if b.kind == "lower" else (b.value - target)
        rhs_mag = abs(target) if b.kind == "lower" else abs(b.value)
        if slack < -(VIOLATION_ABS + VIOLATION_REL * rhs_mag):
            violations.append({"id": b.id, "value": b.value, "slack": float(slack)})
        elif slack <= config.tol:
            equalities.append(b.id)

    flags = numrange._base_deviations(norms, ctx.norm_a, ctx.cross, v)
    range_flags = {key: bool(dev <= 1e-7) for key, dev in flags.items()}

    return ChainReport(v=float(v), lowers=lowers, uppers=uppers,
                       violations=violations, equalities=sorted(equalities),
                       range_flags=range_flags)
