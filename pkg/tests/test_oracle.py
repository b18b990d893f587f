import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from helpers import random_hermitian, random_pd, random_state_floor
from telent.matfun import (
    frechet_log_map,
    frechet_power_map,
    support_projector,
)
from telent.oracle import (
    finite_diff_frechet,
    log_scheme,
    power_scheme,
    quad_frechet_log,
    quad_frechet_power,
    quad_log,
    quad_power,
    quad_projector_integral,
    quad_tre,
    rational_scheme,
)
from telent.renyi import state_power
from telent.states import random_mixed_hs, random_orthogonal_pair
from telent.tre import telescopic_relative_entropy


class TestSchemes:
    def test_weights_positive_and_counts(self):
        for sch in (rational_scheme(), log_scheme(), power_scheme(0.5)):
            assert sch.n == 501
            assert np.all(sch.weights > 0)
            assert np.all(sch.nodes > 0)

    def test_minimum_node_count(self):
        with pytest.raises(ValueError, match="16"):
            rational_scheme(8)

    def test_kind_mismatch_rejected(self):
        with pytest.raises(ValueError, match="rational"):
            quad_log(2.0, scheme=log_scheme())
        with pytest.raises(ValueError, match="p="):
            quad_power(2.0, 0.3, scheme=power_scheme(0.7))


class TestQuadLog:
    def test_at_one(self):
        assert quad_log(1.0) == pytest.approx(0.0, abs=1e-12)

    def test_at_e(self):
        assert quad_log(math.e) == pytest.approx(1.0, abs=1e-6)

    def test_at_half(self):
        assert quad_log(0.5) == pytest.approx(-math.log(2), abs=1e-6)

    @given(st.floats(min_value=1e-3, max_value=1e3))
    def test_sweep(self, x):
        assert quad_log(x) == pytest.approx(math.log(x), abs=1e-6)

    def test_domain(self):
        with pytest.raises(ValueError):
            quad_log(0.0)


class TestQuadFrechetLog:
    def test_identity_base(self, rng):
        D = random_hermitian(rng, 3)
        assert np.abs(quad_frechet_log(np.eye(3), D) - D).max() <= 1e-6

    def test_base_point_to_identity(self, rng):
        A = random_pd(rng, 3)
        assert np.abs(quad_frechet_log(A, A) - np.eye(3)).max() <= 1e-6

    def test_agreement_with_divided_differences(self, rng):
        for _ in range(10):
            A = random_pd(rng, 4)
            D = random_hermitian(rng, 4)
            assert np.abs(
                quad_frechet_log(A, D) - frechet_log_map(A, D)
            ).max() <= 1e-6

    def test_singular_rejected(self):
        with pytest.raises(ValueError, match="positive definite"):
            quad_frechet_log(np.diag([1.0, 0.0]), np.eye(2))


class TestProjectorIntegral:
    def test_maximally_mixed(self):
        out = quad_projector_integral(np.eye(2) / 2)
        assert np.abs(out - np.eye(2)).max() <= 1e-5

    def test_exact_rank_deficient_diagonal(self):
        out = quad_projector_integral(np.diag([1.0, 0.0]))
        assert np.abs(out - np.diag([1.0, 0.0])).max() <= 1e-5

    def test_random_full_rank(self, rng):
        rho = random_mixed_hs(3, 3, rng)
        assert np.abs(quad_projector_integral(rho) - np.eye(3)).max() <= 1e-5

    def test_random_rank_deficient(self, rng):
        for _ in range(5):
            rho = random_mixed_hs(4, 2, rng)
            P = support_projector(rho)
            assert np.abs(quad_projector_integral(rho) - P).max() <= 1e-5

    def test_non_psd_rejected(self):
        with pytest.raises(ValueError, match="PSD"):
            quad_projector_integral(np.diag([1.0, -1.0]))


class TestQuadTre:
    def test_equal_states(self, rng):
        rho = random_mixed_hs(3, 3, rng)
        assert quad_tre(rho, rho, 0.5) == pytest.approx(0.0, abs=1e-8)

    def test_orthogonal_qubits(self):
        rho = np.diag([1.0, 0.0])
        sigma = np.diag([0.0, 1.0])
        assert quad_tre(rho, sigma, 0.5) == pytest.approx(1.0, abs=1e-5)

    def test_agreement_with_spectral(self, rng):
        for _ in range(10):
            d = int(rng.integers(2, 5))
            rho = random_state_floor(rng, d)
            sigma = random_state_floor(rng, d)
            a = float(rng.uniform(0.1, 0.9))
            assert quad_tre(rho, sigma, a) == pytest.approx(
                telescopic_relative_entropy(rho, sigma, a), abs=1e-5
            )

    def test_rank_deficient_pair_via_joint_support(self, rng):
        r, s = random_orthogonal_pair(4, rng)
        assert quad_tre(r, s, 0.3) == pytest.approx(1.0, abs=1e-5)

    def test_node_doubling_tightens(self):
        # small eigenvalue keeps the 251-node error above the roundoff floor
        rho = np.diag([1e-4, 0.2, 0.7999]).astype(complex)
        sigma = np.diag([0.3, 1e-4, 0.6999]).astype(complex)
        exact = telescopic_relative_entropy(rho, sigma, 0.4)
        e251 = abs(quad_tre(rho, sigma, 0.4, scheme=rational_scheme(251)) - exact)
        e501 = abs(quad_tre(rho, sigma, 0.4, scheme=rational_scheme(501)) - exact)
        assert e251 > 0
        assert e251 / max(e501, 1e-17) >= 2.0

    def test_a_domain(self, rng):
        rho = random_mixed_hs(2, 2, rng)
        with pytest.raises(ValueError):
            quad_tre(rho, rho, 0.0)


class TestQuadPower:
    def test_at_one(self):
        for p in (0.1, 0.5, 0.9):
            assert quad_power(1.0, p) == pytest.approx(1.0, rel=1e-5)

    def test_square_root_of_four(self):
        assert quad_power(4.0, 0.5) == pytest.approx(2.0, rel=1e-4)

    def test_at_zero(self):
        assert quad_power(0.0, 0.5) == 0.0

    def test_relative_error_sweep(self):
        for p in (0.1, 0.3, 0.5, 0.7, 0.9):
            sch = power_scheme(p)
            for x in (1e-2, 0.1, 1.0, 10.0, 1e2):
                approx = quad_power(x, p, scheme=sch)
                assert abs(approx - x**p) / x**p <= 1e-5

    def test_domain(self):
        with pytest.raises(ValueError):
            quad_power(-1.0, 0.5)
        with pytest.raises(ValueError):
            quad_power(1.0, 1.0)


class TestQuadFrechetPower:
    def test_power_identity(self, rng):
        A = random_pd(rng, 3)
        out = quad_frechet_power(A, state_power(A, 0.5), 0.5)
        assert np.abs(out - 0.5 * np.eye(3)).max() <= 1e-5

    def test_agreement_with_divided_differences(self, rng):
        for p in (0.2, 0.5, 0.8):
            A = random_pd(rng, 4)
            D = random_hermitian(rng, 4)
            assert np.abs(
                quad_frechet_power(A, D, p) - frechet_power_map(A, D, p)
            ).max() <= 1e-6


class TestFiniteDiff:
    def test_matches_log_map(self, rng):
        for _ in range(5):
            A = random_pd(rng, 3)
            D = random_hermitian(rng, 3)
            fd = finite_diff_frechet("log", A, D, 1e-5)
            assert np.abs(fd - frechet_log_map(A, D)).max() <= 1e-6

    def test_order_two_convergence(self, rng):
        ratios = []
        for _ in range(20):
            A = random_pd(rng, 3, floor=0.2)
            D = random_hermitian(rng, 3)
            exact = frechet_log_map(A, D)
            e1 = np.abs(finite_diff_frechet("log", A, D, 1e-4) - exact).max()
            e2 = np.abs(finite_diff_frechet("log", A, D, 5e-5) - exact).max()
            ratios.append(e1 / e2)
        assert np.median(ratios) == pytest.approx(4.0, abs=0.5)

    def test_zero_direction(self, rng):
        A = random_pd(rng, 3)
        out = finite_diff_frechet("log", A, np.zeros((3, 3)), 1e-4)
        assert np.abs(out).max() == 0.0

    def test_indefinite_step_rejected(self):
        A = np.diag([1e-6, 1.0])
        with pytest.raises(ValueError, match="positive definite"):
            finite_diff_frechet("log", A, np.eye(2), 0.5)

    def test_kind_validation(self, rng):
        A = random_pd(rng, 2)
        with pytest.raises(ValueError, match="kind"):
            finite_diff_frechet("exp", A, np.eye(2), 1e-4)
        with pytest.raises(ValueError, match="order p"):
            finite_diff_frechet("power", A, np.eye(2), 1e-4)
