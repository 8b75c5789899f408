import numpy as np
import pytest

from numrad.prng import Stream


@pytest.fixture
def rng_matrix():
    """Factory for deterministic dense complex test matrices."""

    def make(dim: int, seed: int) -> np.ndarray:
        return Stream(seed, dim).complex_normals(dim * dim).reshape(dim, dim)

    return make


@pytest.fixture
def rng_hermitian(rng_matrix):
    def make(dim: int, seed: int) -> np.ndarray:
        g = rng_matrix(dim, seed)
        return 0.5 * (g + g.conj().T)

    return make
