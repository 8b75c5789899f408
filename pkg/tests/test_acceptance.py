"""Acceptance suite: each criterion at its stated tolerance and scale.

One pass/fail line prints per criterion (visible with pytest -s; pytest -v
shows the same verdicts as test outcomes). The full run takes a few minutes,
dominated by the 7000-matrix chain fuzz; the compiled kernel backend is
expected. Criterion 7's sampler is one-sided by construction: it evaluates
the quadratic form on random unit vectors only, so it can undershoot the
radius but never exceed it (the documented sampling gap).
"""

import json
import math
import time

import numpy as np
import pytest

from numrad import (alpha_beta, bounds, cli, equality_class, genlab, kernels,
                    matcore, numrange, states)
from numrad.prng import Stream

import oracles

SQRT2 = math.sqrt(2.0)
SQRT5 = math.sqrt(5.0)
NILP3 = np.array([[0, 1, 0], [0, 0, 2], [0, 0, 0]], dtype=complex)


def _report(criterion: str, detail: str):
    print(f"ACCEPTANCE PASS {criterion}: {detail}")


def _rand(dim, seed):
    return Stream(seed, dim).complex_normals(dim * dim).reshape(dim, dim)


def test_criterion_1_diagonal_example():
    t0 = time.perf_counter()
    spec = genlab.GenSpec("diagonal_sample", 3, seed=0,
                          params={"samples": [-1 - 2j, 0, 1 + 2j]})
    a = genlab.generate(spec)

    v = numrange.numerical_radius(a)
    norm_a = matcore.spectral_norm(a)
    re, im = matcore.cartesian_parts(a)
    checks = {
        "v": (v, SQRT5),
        "norm": (norm_a, SQRT5),
        "norm_re": (matcore.spectral_norm(re), 1.0),
        "norm_im": (matcore.spectral_norm(im), 2.0),
        "norm_re_plus_im": (matcore.spectral_norm(re + im), 3.0),
        "norm_re_minus_im": (matcore.spectral_norm(re - im), 1.0),
    }
    lows = {b.id: b.value for b in bounds.lower_bounds(a)}
    checks["T1E1"] = (lows["T1E1"], SQRT5 / 2 + 0.5)
    checks["T1E2"] = (lows["T1E2"], SQRT5 / 2 + 0.25)
    checks["T1E3"] = (lows["T1E3"], SQRT5 / 2 + 1 / SQRT2)
    for name, (got, want) in checks.items():
        assert got == pytest.approx(want, abs=1e-9), name
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    _report("criterion 1", f"diagonal example reproduced in {elapsed:.3f}s")


def test_criterion_2_squared_lower_bounds():
    a = np.diag([-1 - 2j, 0, 1 + 2j])
    lows = {b.id: b.value for b in bounds.lower_bounds(a)}
    assert lows["T2E1"] == pytest.approx(2.5 + 1.5, abs=1e-9)
    assert lows["T2E2"] == pytest.approx(2.5 + 2.0, abs=1e-9)
    assert lows["T2E3"] == pytest.approx(2.5 + 0.75, abs=1e-9)
    _report("criterion 2", "squared lower bounds 4, 4.5, 3.25 reproduced")


def test_criterion_3_nilpotent_example():
    v = numrange.numerical_radius(NILP3)
    assert v == pytest.approx(SQRT5 / 2, abs=1e-9)
    p, q = matcore.abs_parts(NILP3)
    assert 0.5 * matcore.spectral_norm(p + q) == pytest.approx(1.5, abs=1e-9)
    refined = 0.5 * matcore.spectral_norm(NILP3) \
        + 0.5 * math.sqrt(matcore.spectral_norm(NILP3 @ NILP3))
    assert refined == pytest.approx((2 + SQRT2) / 2, abs=1e-9)

    ubs = {b.id: b for b in bounds.upper_bounds(NILP3)}
    min_t = ubs["UB_3_5_min_t"].value
    assert min_t == pytest.approx(16 / 7, abs=1e-8)
    cross = matcore.spectral_norm(NILP3.conj().T @ NILP3 + NILP3 @ NILP3.conj().T)
    assert v ** 2 + 1e-12 < min_t < 0.5 * cross - 1e-12
    assert v ** 2 == pytest.approx(1.25, abs=1e-9)
    assert 0.5 * cross == pytest.approx(2.5, abs=1e-12)
    _report("criterion 3", "v, half-abs, refined, and min_t = 16/7 reproduced")


def test_criterion_4_commuting_product_example():
    a = np.diag([-1 - 2j, 0, 1 + 2j])
    b = np.diag([-1 - 1j, 0, 1 + 1j])
    zero = np.zeros((3, 3), dtype=complex)
    vals = {bv.id: bv.value
            for bv in bounds.commutator_bound(a, b, x=None, y=zero,
                                              commuting=True)}
    v_ab = numrange.numerical_radius(a @ b)
    assert v_ab == pytest.approx(math.sqrt(10), abs=1e-9)
    assert vals["COR_4_9_commuting_refined"] == pytest.approx(math.sqrt(14), abs=1e-9)
    assert vals["COR_4_9_commuting_coarse"] == pytest.approx(math.sqrt(20), abs=1e-9)
    _report("criterion 4", "v(ab)=sqrt(10) <= sqrt(14) <= sqrt(20) reproduced")


def test_criterion_5_chain_fuzz(tmp_path):
    out = tmp_path / "fuzz.json"
    t0 = time.perf_counter()
    code = cli.main(["fuzz", "--trials", "1000", "--dims", "2,3,4,6",
                     "--resolution", "1024", "--seed", "20250808",
                     "--out", str(out)])
    elapsed = time.perf_counter() - t0
    assert code == 0
    summary = json.loads(out.read_text())
    assert summary["violations"] == []
    total = sum(stats["trials"] for stats in summary["per_kind"].values())
    assert total == 7000  # 1000 per generator kind
    for bid, stats in summary["per_bound"].items():
        assert stats["violations"] == 0, bid
    assert elapsed < 600.0
    _report("criterion 5",
            f"7000-matrix chain fuzz clean in {elapsed:.1f}s "
            f"(backend={summary['backend']})")


def test_criterion_6_formula_equivalence():
    worst = 0.0
    for trial in range(500):
        dim = 2 + trial % 5
        a = _rand(dim, 60000 + trial)
        v = numrange.numerical_radius(a)
        pm = numrange.radius_via_pm_formula(a)
        worst = max(worst, abs(v - pm))
        assert abs(v - pm) <= 1e-8, (trial, dim, v, pm)
    _report("criterion 6",
            f"pm formula matches radius on 500 matrices (worst gap {worst:.2e})")


def test_criterion_7_brute_force_oracle():
    worst_over = 0.0
    worst_gap = 0.0
    cases = []
    for dim in (2, 3, 4):
        cases.append(genlab.generate(genlab.GenSpec("ginibre", dim, seed=dim)))
        cases.append(genlab.generate(genlab.GenSpec("normal", dim, seed=10 + dim)))
        cases.append(genlab.generate(genlab.GenSpec("hermitian", dim, seed=20 + dim)))
        cases.append(genlab.generate(genlab.GenSpec("upper_nilpotent", dim,
                                                    seed=30 + dim)))
        if dim >= 2:
            cases.append(genlab.generate(genlab.GenSpec("square_zero", dim,
                                                        seed=40 + dim)))
        cases.append(np.diag([-1 - 2j, 0, 1 + 2j])[:dim, :dim])
    for k, a in enumerate(cases):
        v = numrange.numerical_radius(a)
        bf = oracles.brute_force_radius(a, n_samples=200_000, seed=k)
        worst_over = max(worst_over, bf - v)
        worst_gap = max(worst_gap, v - bf)
        assert bf <= v + 1e-8, (k, bf, v)
        assert v - bf <= 5e-3, (k, bf, v)
    _report("criterion 7",
            f"{len(cases)} brute-force checks: max overshoot {worst_over:.2e}, "
            f"max sampling gap {worst_gap:.2e}")


def test_criterion_8_structural_laws():
    for trial in range(200):
        dim = (2, 3, 4, 6)[trial % 4]
        a = genlab.generate(genlab.GenSpec("square_zero", dim, seed=70000 + trial))
        v = numrange.numerical_radius(a)
        na = matcore.spectral_norm(a)
        cross = matcore.spectral_norm(a.conj().T @ a + a @ a.conj().T)
        scale = max(1.0, na)
        assert abs(v - na / 2) <= 1e-8 * scale, trial
        assert abs(v - math.sqrt(cross / 4)) <= 1e-8 * scale, trial

    for trial in range(200):
        dim = (2, 3, 4, 6)[trial % 4]
        a = genlab.generate(genlab.GenSpec("normal", dim, seed=80000 + trial))
        v = numrange.numerical_radius(a)
        na = matcore.spectral_norm(a)
        assert abs(v - na) <= 1e-7 * max(1.0, na), trial
        res = alpha_beta(a)
        assert abs(res.alpha_max - 1.0) <= 1e-7, trial
        assert abs(res.beta_min - 1.0) <= 1e-7, trial

    for trial in range(500):
        dim = (2, 3, 4, 6)[trial % 4]
        a = genlab.generate(genlab.GenSpec("ginibre", dim, seed=90000 + trial))
        v = numrange.numerical_radius(a)
        apow = a
        for n in (2, 3, 4):
            apow = apow @ a
            assert numrange.numerical_radius(apow) <= v ** n + 1e-8, (trial, n)
    _report("criterion 8",
            "square-zero, normal, and power-inequality laws hold "
            "(200 + 200 + 500 draws)")


def _functional_inputs(ineq, trial, stream, dim, n):
    inputs = {}
    for slot in ineq.slots:
        if slot.endswith("_list"):
            inputs[slot] = [stream.complex_normals(dim * dim).reshape(dim, dim)
                            for _ in range(n)]
        else:
            inputs[slot] = stream.complex_normals(dim * dim).reshape(dim, dim)
    return inputs


def test_criterion_9_functional_suite():
    trials = 10_000
    ordered_ids = sorted(states.FUNCTIONAL_REGISTRY)
    for ineq_id in ordered_ids:
        ineq = states.FUNCTIONAL_REGISTRY[ineq_id]
        for trial in range(trials):
            stream = Stream(trial, 5000 + ordered_ids.index(ineq_id))
            dim = 2 + trial % 5
            n = 1 + trial % 3
            inputs = _functional_inputs(ineq, trial, stream, dim, n)
            kind = states.VECTOR if trial % 2 else states.DENSITY
            f = states.random_state(dim, kind, trial * 31 + 7)
            verdict = states.functional_check(ineq_id, inputs, f,
                                              r=1 + trial % 3, t=stream.u01())
            assert verdict.holds, (ineq_id, trial, verdict)

    tol = 1e-9
    for trial in range(trials):
        stream = Stream(trial, 9001)
        dim = 2 + trial % 5
        a = stream.complex_normals(dim * dim).reshape(dim, dim)
        xi = stream.complex_normals(dim)
        eta = stream.complex_normals(dim)
        xi /= np.linalg.norm(xi)
        eta /= np.linalg.norm(eta)
        p, q = matcore.abs_parts(a)
        lhs = abs(np.vdot(eta, a @ xi)) ** 2
        rhs = np.vdot(xi, p @ xi).real * np.vdot(eta, q @ eta).real
        assert lhs <= rhs + tol * max(1.0, rhs), ("mixed_schwarz", trial)

    for trial in range(trials):
        stream = Stream(trial, 9002)
        dim = 2 + trial % 5
        g = stream.complex_normals(dim * dim).reshape(dim, dim)
        psd = g @ g.conj().T
        psd = 0.5 * (psd + psd.conj().T)
        xi = stream.complex_normals(dim)
        xi /= np.linalg.norm(xi)
        expect = np.vdot(xi, psd @ xi).real
        for power in (1.0, 2.0, 3.0, 3.5):
            rhs = np.vdot(xi, matcore.psd_power(psd, power) @ xi).real
            assert expect ** power <= rhs + tol * max(1.0, rhs), ("mccarthy", trial)

    for trial in range(trials):
        stream = Stream(trial, 9003)
        dim = 2 + trial % 5
        x = stream.complex_normals(dim)
        y = stream.complex_normals(dim)
        z = stream.complex_normals(dim)
        z /= np.linalg.norm(z)
        lhs = 2.0 * abs(np.vdot(z, x) * np.vdot(y, z))
        rhs = np.linalg.norm(x) * np.linalg.norm(y) + abs(np.vdot(y, x))
        assert lhs <= rhs + tol * max(1.0, rhs), ("buzano", trial)

    for trial in range(trials):
        stream = Stream(trial, 9004)
        n = 1 + trial % 6
        xs = np.array([-math.log(stream.u01() + 1e-300) for _ in range(n)])
        for r in (1, 2, 3, 5):
            lhs = xs.sum() ** r
            rhs = n ** (r - 1) * (xs ** r).sum()
            assert lhs <= rhs + tol * max(1.0, rhs), ("power_mean", trial, r)

    _report("criterion 9",
            "10k draws per functional inequality and per lemma, zero violations")
