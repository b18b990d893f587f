"""Renyi overlap functionals and the telescopic relative Renyi entropies.

The overlap tr rho^(1-p) sigma^p is always in [0, 1], so telescoping is
not needed for finiteness here; it still produces a normalized quantity
Q_{p,a} = (1 - tr rho^(1-p) tau^p)/(1 - a^p) with tau the collinear
mixture, bounded above by the trace norm distance.

Powers of rank-deficient states follow the support conventions:
0^p = 0 for p > 0 and x^0 is the support projector.
"""

from __future__ import annotations

import numpy as np

from .matfun import DEFAULT_RANK_TOL, RankTolerance, spectral_decompose
from .states import telescope_mix

__all__ = ["state_power", "renyi_overlap", "renyi_overlap_telescoped", "trre"]


def state_power(rho, q: float, rtol: RankTolerance = DEFAULT_RANK_TOL) -> np.ndarray:
    """rho**q on the spectrum of a PSD operator, 0 <= q <= 1.

    Eigenvalues at or below the rank cutoff are treated as exact zeros;
    q = 0 returns the support projector.
    """
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"exponent must lie in [0, 1], got {q}")
    dec = spectral_decompose(rho)
    lam = dec.eigenvalues
    cut = rtol.cutoff(dec.dim, float(lam[-1]))
    if lam[0] < -cut:
        raise ValueError(
            f"state is not positive semidefinite: eigenvalue {lam[0]:.6e}"
        )
    supported = lam > cut
    if q == 0.0:
        vals = supported.astype(float)
    else:
        vals = np.where(supported, np.maximum(lam, 0.0) ** q, 0.0)
    return dec.apply(vals)


def renyi_overlap(
    rho, sigma, p: float, rtol: RankTolerance = DEFAULT_RANK_TOL
) -> float:
    """tr rho^(1-p) sigma^p for p in [0, 1].

    Symmetric under swapping (rho, p) with (sigma, 1-p); equals 1 at
    rho = sigma, vanishes exactly on orthogonal pairs, and is bounded
    below by 1 - T(rho, sigma).
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Renyi order p must lie in [0, 1], got {p}")
    rho = np.asarray(rho, dtype=complex)
    sigma = np.asarray(sigma, dtype=complex)
    if rho.shape != sigma.shape:
        raise ValueError(f"dimension mismatch: {rho.shape} vs {sigma.shape}")
    value = float(
        np.real(np.trace(state_power(rho, 1.0 - p, rtol) @ state_power(sigma, p, rtol)))
    )
    return max(value, 0.0)


def renyi_overlap_telescoped(
    rho, sigma, p: float, a: float, rtol: RankTolerance = DEFAULT_RANK_TOL
) -> float:
    """Raw telescoped overlap tr rho^(1-p) (a*rho + (1-a)*sigma)^p.

    Takes values in [a^p, 1]; the minimum a^p is attained exactly on
    orthogonal pairs.
    """
    if not 0.0 <= a < 1.0:
        raise ValueError(f"telescoping parameter a must lie in [0, 1), got {a}")
    return renyi_overlap(rho, telescope_mix(rho, sigma, a), p, rtol)


def trre(
    rho, sigma, p: float, a: float, rtol: RankTolerance = DEFAULT_RANK_TOL
) -> float:
    """Telescopic relative Renyi entropy Q_{p,a} in [0, 1].

    (1 - tr rho^(1-p) tau^p) / (1 - a^p) with tau = a*rho + (1-a)*sigma.
    Zero iff rho = sigma; equals 1 on orthogonal pairs; bounded above by
    the trace norm distance T(rho, sigma).
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"Renyi order p must lie in (0, 1), got {p}")
    overlap = renyi_overlap_telescoped(rho, sigma, p, a, rtol)
    value = (1.0 - overlap) / (1.0 - a**p)
    return max(float(value), 0.0)
