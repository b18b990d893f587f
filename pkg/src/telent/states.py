"""Density-matrix construction, validation, and random sampling.

Includes the collinear ("telescoping") mixture a*rho + (1-a)*sigma, the
orthogonality test, and the seeded samplers the verification engine uses
(Haar-random pure states and Hilbert-Schmidt / Ginibre mixed states).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matfun import DEFAULT_RANK_TOL, RankTolerance, check_hermitian

__all__ = [
    "EPS_ORTH",
    "SeededSampler",
    "check_density",
    "pure_from_vector",
    "qubit_pair_with_angle",
    "telescope_mix",
    "haar_unitary",
    "haar_random_pure",
    "random_mixed_hs",
    "random_orthogonal_pair",
    "is_orthogonal",
    "state_to_jsonable",
    "state_from_jsonable",
]

# Absolute tolerance on tr(rho sigma) for declaring orthogonality; the
# overlap of normalized states is scale-free, so this is independent of
# the rank tolerance.
EPS_ORTH = 1e-12

_TRACE_ATOL = 1e-10
_U64 = (1 << 64) - 1


@dataclass
class SeededSampler:
    """Deterministic source of per-trial RNG streams.

    A fixed (seed, counter) pair always yields the same stream; trial
    streams are derived as seed XOR counter so independent workers can
    reproduce any trial in isolation.
    """

    seed: int
    counter: int = 0

    def rng_at(self, index: int) -> np.random.Generator:
        return np.random.default_rng((self.seed ^ index) & _U64)

    def next_rng(self) -> np.random.Generator:
        rng = self.rng_at(self.counter)
        self.counter += 1
        return rng


def check_density(
    rho, rtol: RankTolerance = DEFAULT_RANK_TOL, atol_trace: float = _TRACE_ATOL
) -> np.ndarray:
    """Validate a density matrix: Hermitian, PSD within tolerance, trace 1."""
    rho = check_hermitian(rho)
    tr = float(np.trace(rho).real)
    if abs(tr - 1.0) > atol_trace:
        raise ValueError(f"trace must be 1, got {tr!r}")
    lam = np.linalg.eigvalsh(rho)
    cut = rtol.cutoff(rho.shape[0], float(lam[-1]))
    if lam[0] < -cut:
        raise ValueError(
            f"state is not positive semidefinite: eigenvalue {lam[0]:.6e}"
        )
    return rho


def pure_from_vector(v) -> np.ndarray:
    """Normalized rank-one projector v v* / <v, v>."""
    v = np.asarray(v, dtype=complex).ravel()
    ns = float(np.real(np.vdot(v, v)))
    if ns == 0.0:
        raise ValueError("cannot build a pure state from the zero vector")
    return np.outer(v, v.conj()) / ns


def qubit_pair_with_angle(theta: float) -> tuple[np.ndarray, np.ndarray]:
    """Two pure qubit states whose Bloch vectors subtend angle ``theta``.

    Their trace norm distance is |sin(theta/2)|.
    """
    if not 0.0 <= theta <= np.pi:
        raise ValueError(f"theta must lie in [0, pi], got {theta}")
    rho = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
    c, s = np.cos(theta), np.sin(theta)
    sigma = np.array([[(1 + c) / 2, s / 2], [s / 2, (1 - c) / 2]], dtype=complex)
    return rho, sigma


def telescope_mix(rho, sigma, a: float) -> np.ndarray:
    """Collinear mixture a*rho + (1-a)*sigma pulling sigma toward rho."""
    rho = np.asarray(rho, dtype=complex)
    sigma = np.asarray(sigma, dtype=complex)
    if rho.shape != sigma.shape:
        raise ValueError(f"dimension mismatch: {rho.shape} vs {sigma.shape}")
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"mixing parameter a must lie in [0, 1], got {a}")
    return a * rho + (1.0 - a) * sigma


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via QR of a complex Ginibre matrix."""
    G = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    Q, R = np.linalg.qr(G)
    d = np.diag(R)
    return Q * (d / np.abs(d))


def haar_random_pure(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Unitarily invariant random pure state (normalized Gaussian vector)."""
    if dim < 1:
        raise ValueError("dim must be at least 1")
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return pure_from_vector(v)


def random_mixed_hs(dim: int, rank: int, rng: np.random.Generator) -> np.ndarray:
    """Hilbert-Schmidt (Ginibre) random state of the requested rank.

    G G*/tr(G G*) for a dim x rank complex Gaussian G; the result has the
    requested rank almost surely, and full rank gives a faithful state.
    """
    if not 1 <= rank <= dim:
        raise ValueError(f"rank must lie in [1, {dim}], got {rank}")
    G = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    M = G @ G.conj().T
    return M / float(np.trace(M).real)


def random_orthogonal_pair(
    dim: int,
    rng: np.random.Generator,
    rank_rho: int | None = None,
    rank_sigma: int | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Two states supported on orthogonal subspaces of a Haar-random frame."""
    if dim < 2:
        raise ValueError("orthogonal pairs need dim >= 2")
    U = haar_unitary(dim, rng)
    k = int(rng.integers(1, dim))
    A, B = U[:, :k], U[:, k:]
    ra = rank_rho if rank_rho is not None else int(rng.integers(1, k + 1))
    rb = rank_sigma if rank_sigma is not None else int(rng.integers(1, dim - k + 1))
    rho = A @ random_mixed_hs(k, ra, rng) @ A.conj().T
    sigma = B @ random_mixed_hs(dim - k, rb, rng) @ B.conj().T
    return rho, sigma


def is_orthogonal(rho, sigma, tol: float = EPS_ORTH) -> bool:
    """True iff tr(rho sigma) <= tol (mutually orthogonal supports)."""
    rho = np.asarray(rho, dtype=complex)
    sigma = np.asarray(sigma, dtype=complex)
    if rho.shape != sigma.shape:
        raise ValueError(f"dimension mismatch: {rho.shape} vs {sigma.shape}")
    return float(np.real(np.trace(rho @ sigma))) <= tol


def state_to_jsonable(rho) -> dict:
    """JSON-ready form {"dim": n, "matrix": [[[re, im], ...], ...]} (row-major)."""
    rho = np.asarray(rho, dtype=complex)
    matrix = [
        [[float(z.real), float(z.imag)] for z in row] for row in rho
    ]
    return {"dim": int(rho.shape[0]), "matrix": matrix}


def state_from_jsonable(doc: dict) -> np.ndarray:
    """Parse a state from the JSON document formats accepted by the CLI.

    Exactly one of the keys "matrix", "diag", "pure", "bloch" must be
    present.  Parse errors name the offending field; the result is
    validated as a density matrix.
    """
    if not isinstance(doc, dict):
        raise ValueError("state document must be a JSON object")
    forms = [k for k in ("matrix", "diag", "pure", "bloch") if k in doc]
    if len(forms) != 1:
        raise ValueError(
            'state document must contain exactly one of "matrix", "diag", '
            f'"pure", "bloch"; found {forms or "none"}'
        )
    kind = forms[0]
    try:
        if kind == "matrix":
            entries = np.asarray(doc["matrix"], dtype=float)
            if entries.ndim != 3 or entries.shape[2] != 2:
                raise ValueError(
                    'field "matrix" must be a square array of [re, im] pairs'
                )
            rho = entries[..., 0] + 1j * entries[..., 1]
            if rho.shape[0] != rho.shape[1]:
                raise ValueError('field "matrix" must be square')
            if "dim" in doc and int(doc["dim"]) != rho.shape[0]:
                raise ValueError(
                    f'field "dim" ({doc["dim"]}) does not match the matrix '
                    f"size ({rho.shape[0]})"
                )
        elif kind == "diag":
            d = np.asarray(doc["diag"], dtype=float)
            if d.ndim != 1 or d.size == 0:
                raise ValueError('field "diag" must be a nonempty list of reals')
            rho = np.diag(d).astype(complex)
        elif kind == "pure":
            entries = np.asarray(doc["pure"], dtype=float)
            if entries.ndim != 2 or entries.shape[1] != 2:
                raise ValueError('field "pure" must be a list of [re, im] pairs')
            rho = pure_from_vector(entries[:, 0] + 1j * entries[:, 1])
        else:  # bloch
            v = np.asarray(doc["bloch"], dtype=float)
            if v.shape != (3,):
                raise ValueError('field "bloch" must be a 3-vector [x, y, z]')
            if np.linalg.norm(v) > 1.0 + 1e-9:
                raise ValueError(
                    f'field "bloch" must have norm <= 1, got {np.linalg.norm(v):.6f}'
                )
            x, y, z = v
            rho = 0.5 * np.array(
                [[1 + z, x - 1j * y], [x + 1j * y, 1 - z]], dtype=complex
            )
    except (TypeError, KeyError) as exc:
        raise ValueError(f'malformed field "{kind}": {exc}') from exc
    try:
        return check_density(rho)
    except ValueError as exc:
        raise ValueError(f'field "{kind}" is not a valid density matrix: {exc}')
