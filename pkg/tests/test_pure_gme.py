import math

import numpy as np
import pytest
from scipy.stats import unitary_group

from geoment.pure_gme import (
    DegenerateContractionError,
    SolverConfig,
    solve_gme,
    stationarity_residual,
    stationarity_sweep,
    sweep_history,
)
from geoment.states import (
    ProductState,
    PureState,
    apply_local_unitaries,
    make_ghz,
    make_w,
    make_w_tilde,
)

from oracles import brute_force_lambda


def random_state(rng, n, real=False):
    a = rng.standard_normal(2**n)
    if not real:
        a = a + 1j * rng.standard_normal(2**n)
    return PureState.from_unnormalized(a)


def random_product(rng, n):
    return ProductState.from_unnormalized(
        [rng.standard_normal(2) + 1j * rng.standard_normal(2) for _ in range(n)]
    )


def fidelity_per_site(phi, target_site):
    return min(abs(np.vdot(c, target_site)) ** 2 for c in phi.site_coefficients)


class TestSweep:
    def test_ghz_fixed_point(self):
        phi, lam = stationarity_sweep(make_ghz(), ProductState.basis([0, 0, 0]))
        assert lam == pytest.approx(1 / math.sqrt(2), abs=1e-15)
        for c in phi.site_coefficients:
            np.testing.assert_allclose(c, [1, 0], atol=1e-15)

    def test_w_from_000_by_hand(self):
        # Site 1 sees (<000|W>, <100|W>) = (0, 1/sqrt3) -> |1>; then sites 2 and 3
        # see (1/sqrt3, 0) -> |0>. Overlap goes 0 -> 1/sqrt3.
        start = ProductState.basis([0, 0, 0])
        assert abs(make_w().overlap(start)) == 0
        phi, lam = stationarity_sweep(make_w(), start)
        assert lam == pytest.approx(1 / math.sqrt(3), abs=1e-15)
        np.testing.assert_allclose(phi.to_pure().amplitudes, ProductState.basis([1, 0, 0]).to_pure().amplitudes,
                                   atol=1e-15)

    def test_product_state_reaches_one(self):
        rng = np.random.default_rng(1)
        target = random_product(rng, 4)
        _, history = sweep_history(target.to_pure(), random_product(rng, 4))
        assert history[-1] == pytest.approx(1.0, abs=1e-12)

    def test_degenerate_start_raises(self):
        with pytest.raises(DegenerateContractionError):
            stationarity_sweep(make_ghz(), ProductState.basis([0, 1, 0]))

    def test_qubit_mismatch(self):
        with pytest.raises(ValueError):
            stationarity_sweep(make_ghz(), ProductState.basis([0, 0]))

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_monotone(self, n):
        rng = np.random.default_rng(n)
        for _ in range(10):
            psi = random_state(rng, n)
            _, history = sweep_history(psi, random_product(rng, n), max_iterations=300)
            assert np.all(np.diff(history) >= -1e-13)
            assert 0 <= min(history) and max(history) <= 1 + 1e-12


class TestSolve:
    def test_ghz(self):
        r = solve_gme(make_ghz())
        assert r.lambda_max == pytest.approx(1 / math.sqrt(2), abs=1e-12)
        assert r.e_sin2 == pytest.approx(0.5, abs=1e-12)
        assert r.converged

    @pytest.mark.parametrize("make", [make_w, make_w_tilde])
    def test_w_family(self, make):
        r = solve_gme(make())
        assert r.lambda_max == pytest.approx(2 / 3, abs=1e-12)
        assert r.e_sin2 == pytest.approx(5 / 9, abs=1e-12)

    def test_w_tilde_closest_product(self):
        r = solve_gme(make_w_tilde())
        target = np.array([math.sqrt(1 / 3), math.sqrt(2 / 3)])
        assert fidelity_per_site(r.closest_product, target) >= 1 - 1e-8

    def test_result_invariants(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            psi = random_state(rng, 3)
            r = solve_gme(psi)
            assert r.e_sin2 == pytest.approx(1 - r.lambda_max**2, abs=1e-14)
            assert abs(psi.overlap(r.closest_product)) == pytest.approx(r.lambda_max, abs=1e-12)
            assert 0 <= r.e_sin2 <= 1

    def test_deterministic(self):
        psi = random_state(np.random.default_rng(4), 4)
        a = solve_gme(psi, SolverConfig(seed=11))
        b = solve_gme(psi, SolverConfig(seed=11))
        assert a.lambda_max == b.lambda_max
        np.testing.assert_array_equal(a.closest_product.to_pure().amplitudes,
                                      b.closest_product.to_pure().amplitudes)

    def test_stationarity_residual(self):
        rng = np.random.default_rng(5)
        for psi in [make_ghz(), make_w(), make_w_tilde()] + [random_state(rng, 3) for _ in range(10)]:
            r = solve_gme(psi)
            assert stationarity_residual(psi, r.closest_product) <= 1e-8

    def test_local_unitary_invariance(self):
        rng = np.random.default_rng(6)
        psi = random_state(rng, 3)
        base = solve_gme(psi).lambda_max
        for trial in range(10):
            us = [unitary_group.rvs(2, random_state=100 * trial + k) for k in range(3)]
            assert solve_gme(apply_local_unitaries(psi, us)).lambda_max == pytest.approx(base, abs=1e-9)

    def test_matches_brute_force(self):
        rng = np.random.default_rng(8)
        for _ in range(20):
            psi = random_state(rng, 3, real=True)
            assert solve_gme(psi).lambda_max == pytest.approx(
                brute_force_lambda(psi.amplitudes), abs=1e-6)

    def test_larger_n_product_and_ghz(self):
        rng = np.random.default_rng(9)
        prod = random_product(rng, 7)
        assert solve_gme(prod.to_pure()).lambda_max == pytest.approx(1, abs=1e-10)
        ghz = np.zeros(2**7)
        ghz[[0, -1]] = 1 / math.sqrt(2)
        assert solve_gme(PureState(ghz)).e_sin2 == pytest.approx(0.5, abs=1e-10)

    def test_nonconvergence_flag(self):
        r = solve_gme(make_w(), SolverConfig(max_iterations=1, restarts=2))
        assert not r.converged
        assert 0 < r.lambda_max <= 2 / 3 + 1e-12

    @pytest.mark.parametrize("kwargs", [{"tolerance": 0}, {"restarts": 0}, {"max_iterations": 0},
                                        {"seed": -1}])
    def test_config_validation(self, kwargs):
        with pytest.raises(ValueError):
            SolverConfig(**kwargs)
