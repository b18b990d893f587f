"""Shared sampling helpers for the test suite."""

import numpy as np

from telent.states import random_mixed_hs


def random_hermitian(rng, dim, scale=1.0):
    G = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return scale * (G + G.conj().T) / 2


def random_pd(rng, dim, floor=0.05):
    """Well-conditioned positive definite matrix with unit trace."""
    M = random_mixed_hs(dim, dim, rng)
    M = (M + floor * np.eye(dim)) / (1.0 + floor * dim)
    return M


def random_state_floor(rng, dim, floor=1e-3):
    """Full-rank random state with smallest eigenvalue at least ``floor``.

    Quadrature-vs-spectral comparisons need inputs whose spectrum stays
    inside the schemes' resolved range; resampling enforces that without
    biasing the interior.
    """
    while True:
        M = random_mixed_hs(dim, dim, rng)
        if np.linalg.eigvalsh(M)[0] >= floor:
            return M
