"""Matrix algebra layer: examples and invariants."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from numrad import matcore
from numrad.errors import DimensionMismatch, NonHermitianInput, NotPSD
from numrad.prng import Stream

import oracles

NILP3 = np.array([[0, 1, 0], [0, 0, 2], [0, 0, 0]], dtype=complex)
DIAG_EX = np.diag([-1 - 2j, 0, 1 + 2j])


def _random(dim, seed):
    return Stream(seed, dim).complex_normals(dim * dim).reshape(dim, dim)


class TestHermEig:
    def test_diagonal(self):
        es = matcore.herm_eig(np.diag([1.0, -1.0]).astype(complex))
        np.testing.assert_allclose(es.eigenvalues, [-1.0, 1.0])

    def test_symmetric_swap(self):
        es = matcore.herm_eig(np.array([[0, 1], [1, 0]], dtype=complex))
        np.testing.assert_allclose(es.eigenvalues, [-1.0, 1.0], atol=1e-15)

    def test_nilpotent_real_part_spectrum(self):
        # characteristic polynomial of Re(NILP3) is l(l^2 - 5/4)
        re = 0.5 * (NILP3 + NILP3.conj().T)
        es = matcore.herm_eig(re)
        expect = [-math.sqrt(5) / 2, 0.0, math.sqrt(5) / 2]
        np.testing.assert_allclose(es.eigenvalues, expect, atol=1e-12)

    def test_rejects_non_hermitian(self):
        with pytest.raises(NonHermitianInput):
            matcore.herm_eig(np.array([[0, 1], [0, 0]], dtype=complex))

    def test_residual_invariant(self):
        for seed in range(20):
            g = _random(2 + seed % 5, seed)
            h = 0.5 * (g + g.conj().T)
            es = matcore.herm_eig(h)
            scale = max(1.0, float(np.abs(es.eigenvalues).max()))
            resid = h @ es.eigenvectors - es.eigenvectors * es.eigenvalues
            assert np.linalg.norm(resid, axis=0).max() <= 1e-10 * scale
            gram = es.eigenvectors.conj().T @ es.eigenvectors
            assert np.abs(gram - np.eye(h.shape[0])).max() <= 1e-10


class TestSpectralNorm:
    def test_identity(self):
        assert matcore.spectral_norm(np.eye(3, dtype=complex)) == pytest.approx(1.0)

    def test_nilpotent(self):
        # eigenvalues of a*a are diag(0, 1, 4)
        assert matcore.spectral_norm(NILP3) == pytest.approx(2.0, abs=1e-12)

    def test_nilpotent_square(self):
        assert matcore.spectral_norm(NILP3 @ NILP3) == pytest.approx(2.0, abs=1e-12)

    def test_matches_svd_oracle(self):
        for seed in range(15):
            a = _random(2 + seed % 4, 700 + seed)
            assert matcore.spectral_norm(a) == pytest.approx(
                oracles.np_spectral_norm(a), abs=1e-11)

    def test_adjoint_invariance(self):
        for seed in range(10):
            a = _random(3, 800 + seed)
            na = matcore.spectral_norm(a)
            assert matcore.spectral_norm(a.conj().T) == pytest.approx(na, rel=1e-10)
            abs_a, _ = matcore.abs_parts(a)
            assert matcore.spectral_norm(abs_a) == pytest.approx(na, rel=1e-10)


class TestPsdPower:
    def test_diagonal_sqrt(self):
        p = np.diag([0.0, 1.0, 4.0]).astype(complex)
        np.testing.assert_allclose(matcore.psd_power(p, 0.5),
                                   np.diag([0.0, 1.0, 2.0]), atol=1e-12)

    def test_identity_any_power(self):
        for power in (0.5, 1.0, 2.0, 3.5):
            np.testing.assert_allclose(matcore.psd_power(np.eye(2, dtype=complex), power),
                                       np.eye(2), atol=1e-14)

    def test_rank_one_sqrt(self):
        a = np.array([[0, 1], [0, 0]], dtype=complex)
        np.testing.assert_allclose(matcore.psd_power(a.conj().T @ a, 0.5),
                                   np.diag([0.0, 1.0]), atol=1e-14)

    def test_sqrt_then_square_roundtrip(self):
        for seed in range(10):
            g = _random(4, 900 + seed)
            p = g @ g.conj().T
            p = 0.5 * (p + p.conj().T)
            root = matcore.psd_power(p, 0.5)
            back = matcore.psd_power(root, 2.0)
            scale = matcore.spectral_norm(p)
            assert np.abs(back - p).max() <= 1e-8 * scale

    def test_rejects_indefinite(self):
        with pytest.raises(NotPSD):
            matcore.psd_power(np.diag([1.0, -1.0]).astype(complex), 0.5)


class TestCartesianParts:
    def test_diagonal_example(self):
        re, im = matcore.cartesian_parts(DIAG_EX)
        np.testing.assert_allclose(re, np.diag([-1.0, 0.0, 1.0]), atol=1e-15)
        np.testing.assert_allclose(im, np.diag([-2.0, 0.0, 2.0]), atol=1e-15)
        assert matcore.spectral_norm(re) == pytest.approx(1.0)
        assert matcore.spectral_norm(im) == pytest.approx(2.0)

    def test_hermitian_and_skew(self):
        h = np.array([[1, 2 + 1j], [2 - 1j, -3]], dtype=complex)
        re, im = matcore.cartesian_parts(h)
        np.testing.assert_allclose(re, h, atol=1e-15)
        np.testing.assert_allclose(im, 0 * h, atol=1e-15)
        re2, im2 = matcore.cartesian_parts(1j * h)
        np.testing.assert_allclose(re2, 0 * h, atol=1e-15)
        np.testing.assert_allclose(im2, h, atol=1e-15)

    def test_reconstruction(self):
        for seed in range(10):
            a = _random(4, seed)
            re, im = matcore.cartesian_parts(a)
            assert np.abs(re + 1j * im - a).max() <= 1e-15 * max(1, np.abs(a).max())


class TestAbsParts:
    def test_nilpotent_parts(self):
        p, q = matcore.abs_parts(NILP3)
        np.testing.assert_allclose(p, np.diag([0.0, 1.0, 2.0]), atol=1e-12)
        np.testing.assert_allclose(q, np.diag([1.0, 2.0, 0.0]), atol=1e-12)
        assert 0.5 * matcore.spectral_norm(p + q) == pytest.approx(1.5, abs=1e-12)

    def test_unitary(self):
        u = np.array([[0, 1], [1j, 0]], dtype=complex)
        p, q = matcore.abs_parts(u)
        np.testing.assert_allclose(p, np.eye(2), atol=1e-12)
        np.testing.assert_allclose(q, np.eye(2), atol=1e-12)


class TestJson:
    def test_roundtrip_example(self):
        obj = matcore.matrix_to_json(DIAG_EX)
        assert obj["dim"] == 3
        back = matcore.matrix_from_json(obj)
        np.testing.assert_array_equal(back, DIAG_EX)

    @given(st.integers(min_value=1, max_value=5), st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=50, deadline=None)
    def test_roundtrip_random(self, dim, seed):
        a = _random(dim, seed)
        back = matcore.matrix_from_json(matcore.matrix_to_json(a))
        np.testing.assert_array_equal(back, a)

    def test_malformed(self):
        with pytest.raises(ValueError):
            matcore.matrix_from_json({"dim": 2, "re": [[1.0]], "im": [[0.0]]})
        with pytest.raises(ValueError):
            matcore.matrix_from_json('{"re": [[1]]}')


def test_rejects_non_square_and_nan():
    with pytest.raises(DimensionMismatch):
        matcore.as_matrix(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        matcore.as_matrix(np.array([[np.nan, 0], [0, 0]]))


def test_adjoint_involution():
    for seed in range(5):
        a = _random(3, 60 + seed)
        np.testing.assert_array_equal(matcore.adjoint(matcore.adjoint(a)), a)
