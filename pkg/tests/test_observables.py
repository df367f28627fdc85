"""Tests for the conserved functionals, seminorm evaluators, and decay bounds.

Closed-form targets for the Gaussian family (v0 = sqrt(2 pi) e^{-2x^2},
v1 = 4 v x sqrt(2 pi) e^{-2x^2}):

    int x v1 dx = pi v            -> L = rho pi v
    int v1 dx   = 0               -> P = 0
    (rho/2)||v1||^2 = rho pi^(3/2) v^2

and for the test profile v1 = e^{-x^2}: P = rho int v1 = rho sqrt(pi).
"""

import numpy as np
import pytest
from scipy.integrate import quad

from peridisp.dispersion import omega_sq
from peridisp.observables import (
    NonIntegrableDataError,
    angular_momentum,
    energy,
    energy_closed_form,
    kinetic_energy,
    l2_decay_bound,
    l2_norm,
    momentum,
    nonlocal_seminorm,
    nonlocal_seminorm_direct,
    sup_bound,
    track_series,
)
from peridisp.params import PeridynamicParams
from peridisp.solver import (
    build_grid,
    classical_evolve,
    evolve,
    forward_transform,
    gaussian_initial_data,
    prepare_state,
)

DEFAULTS = PeridynamicParams()


@pytest.fixture(scope="module")
def grid():
    return build_grid(40.0, 8192)


@pytest.fixture(scope="module")
def moving_state(grid):
    data = gaussian_initial_data(1.0, grid)
    return data, prepare_state(data.v0_hat, data.v1_hat, grid, DEFAULTS)


@pytest.fixture(scope="module")
def resting_state(grid):
    data = gaussian_initial_data(0.0, grid)
    return data, prepare_state(data.v0_hat, data.v1_hat, grid, DEFAULTS)


class TestEnergy:
    def test_zero_data(self, grid):
        zero = np.zeros(grid.n_modes, complex)
        state = prepare_state(zero, zero, grid, DEFAULTS)
        assert energy(evolve(state, 1.0), state) == 0.0

    def test_conserved_and_matches_modal_sum(self, moving_state):
        _, state = moving_state
        target = energy_closed_form(state)
        for t in (0.0, 1.0, 4.0, 8.0):
            e = energy(evolve(state, t), state)
            assert abs(e - target) / target <= 1e-8

    def test_quadrature_oracle_for_resting_data(self, resting_state):
        # E = rho pi int w^2 |v0_hat|^2 dxi with v0_hat = e^{-xi^2/8}/2,
        # evaluated with adaptive quadrature over the closed forms.
        data, state = resting_state
        p = state.params
        val, _ = quad(
            lambda xi: omega_sq(xi, p) * 0.25 * np.exp(-(xi**2) / 4.0), 0, 30.0, limit=400
        )
        oracle = p.rho * np.pi * 2 * val
        assert energy(evolve(state, 0.0), state) == pytest.approx(oracle, rel=1e-6)

    def test_closed_form_identity(self, moving_state, grid):
        # E(0) = (rho/2)||v1||^2 + (kappa/2) N[v0].
        data, state = moving_state
        p = state.params
        kin = 0.5 * p.rho * grid.dx * np.sum(data.v1**2)
        ela = 0.5 * p.kappa * nonlocal_seminorm(data.v0_hat, state)
        assert energy_closed_form(state) == pytest.approx(kin + ela, rel=1e-10)
        # Gaussian kinetic part in closed form: rho pi^(3/2) v^2.
        assert kin == pytest.approx(np.pi**1.5, rel=1e-10)

    def test_grid_mismatch_rejected(self, moving_state):
        from peridisp.solver import FieldSnapshot

        _, state = moving_state
        bad = FieldSnapshot(t=0.0, u=np.zeros(16), u_t=np.zeros(16))
        with pytest.raises(ValueError):
            energy(bad, state)


class TestMomentum:
    def test_resting_gaussian_zero(self, resting_state):
        _, state = resting_state
        for t in (0.0, 3.0, 8.0):
            assert abs(momentum(evolve(state, t), state)) < 1e-12

    def test_moving_gaussian_zero(self, moving_state):
        # v1_hat = i v xi v0_hat vanishes at xi = 0, so P = 0 for every v.
        _, state = moving_state
        for t in (0.0, 5.0):
            assert abs(momentum(evolve(state, t), state)) < 1e-12

    def test_gaussian_profile_value(self, grid):
        # v1 = e^{-x^2}: P = rho int v1 = rho sqrt(pi) = 2 pi rho v1_hat(0).
        data = gaussian_initial_data(0.0, grid)
        v1_hat = forward_transform(np.exp(-grid.x**2), grid)
        state = prepare_state(data.v0_hat, v1_hat, grid, DEFAULTS)
        p0 = momentum(evolve(state, 0.0), state)
        assert p0 == pytest.approx(np.sqrt(np.pi), abs=1e-8)
        assert p0 == pytest.approx(2 * np.pi * v1_hat[grid.n_modes // 2].real, rel=1e-10)
        assert momentum(evolve(state, 6.0), state) == pytest.approx(p0, abs=1e-10)


class TestAngularMomentum:
    def test_resting_zero(self, resting_state):
        _, state = resting_state
        assert abs(angular_momentum(evolve(state, 4.0), state)) < 1e-10

    def test_gaussian_family_value(self, moving_state):
        # L = rho int x v1 dx = rho pi v, conserved along the flow.
        _, state = moving_state
        for t in (0.0, 2.0, 8.0):
            assert angular_momentum(evolve(state, t), state) == pytest.approx(np.pi, abs=1e-6)

    def test_translation_shifts_by_mean(self, grid):
        # Translating v1 by x0 adds rho x0 int v1 to L.
        data = gaussian_initial_data(0.0, grid)
        x0 = 3.0
        base = np.exp(-grid.x**2)
        shifted = np.exp(-((grid.x - x0) ** 2))
        st_a = prepare_state(data.v0_hat, forward_transform(base, grid), grid, DEFAULTS)
        st_b = prepare_state(data.v0_hat, forward_transform(shifted, grid), grid, DEFAULTS)
        La = angular_momentum(evolve(st_a, 0.0), st_a)
        Lb = angular_momentum(evolve(st_b, 0.0), st_b)
        assert Lb - La == pytest.approx(x0 * np.sqrt(np.pi), rel=1e-8)


class TestSeminorm:
    def test_constant_field_is_zero(self, grid):
        const = np.full(grid.n_modes, 0.7)
        modes = forward_transform(const, grid)
        data = gaussian_initial_data(0.0, grid)
        state = prepare_state(data.v0_hat, data.v1_hat, grid, DEFAULTS)
        assert abs(nonlocal_seminorm(modes, state)) < 1e-20
        direct = nonlocal_seminorm_direct(
            lambda x: np.full_like(x, 0.7), lambda x: np.zeros_like(x), DEFAULTS, 20.0, 256
        )
        assert abs(direct) < 1e-20

    def test_spectral_vs_direct_on_coarse_grid(self):
        # Independent double-quadrature evaluator, n = 1024, L = 20.
        g = build_grid(20.0, 1024)
        data = gaussian_initial_data(0.0, g)
        state = prepare_state(data.v0_hat, data.v1_hat, g, DEFAULTS)
        spectral = nonlocal_seminorm(data.v0_hat, state)
        direct = nonlocal_seminorm_direct(
            lambda x: np.sqrt(2 * np.pi) * np.exp(-2 * x**2),
            lambda x: -4 * x * np.sqrt(2 * np.pi) * np.exp(-2 * x**2),
            DEFAULTS,
            20.0,
            1024,
        )
        assert abs(spectral - direct) / spectral < 1e-4

    def test_kinetic_term_matches_modal_identity(self, moving_state):
        # dx sum u_t^2 equals the modal form
        # 2 pi int [w^2 |v0^|^2 sin^2 + |v1^|^2 cos^2 - w sin cos 2 Re(v0^ v1^*)] dxi.
        data, state = moving_state
        g = state.grid
        for t in (0.7, 3.3):
            snap = evolve(state, t)
            real_side = g.dx * np.sum(snap.u_t**2)
            wt = state.omega_k * t
            cross = 2.0 * np.real(state.v0_hat * np.conj(state.v1_hat))
            modal = (
                2.0 * np.pi * g.dxi * np.sum(
                    state.omega_k**2 * np.abs(state.v0_hat) ** 2 * np.sin(wt) ** 2
                    + np.abs(state.v1_hat) ** 2 * np.cos(wt) ** 2
                    - state.omega_k * np.sin(wt) * np.cos(wt) * cross
                )
            )
            assert abs(real_side - modal) / real_side < 1e-10

    def test_energy_bookkeeping_along_flow(self, resting_state):
        # (kappa/2) N[u(t)] + kinetic(t) must stay equal to E(0).
        _, state = resting_state
        p = state.params
        e0 = energy_closed_form(state)
        for t in (1.0, 5.0):
            snap = evolve(state, t)
            total = kinetic_energy(snap, state) + 0.5 * p.kappa * nonlocal_seminorm(snap, state)
            assert total == pytest.approx(e0, rel=1e-10)


class TestL2DecayBound:
    def test_initial_value_is_v0_norm(self, moving_state, grid):
        data, state = moving_state
        norm_v0 = np.sqrt(grid.dx * np.sum(data.v0**2))
        assert l2_decay_bound(0.0, state) == pytest.approx(norm_v0, rel=1e-10)

    def test_dominates_along_flow(self, moving_state):
        _, state = moving_state
        for t in range(1, 9):
            snap = evolve(state, float(t))
            assert l2_norm(snap, state) <= l2_decay_bound(float(t), state)

    def test_resting_data_norm_never_grows(self, resting_state):
        data, state = resting_state
        bound = l2_decay_bound(137.0, state)
        norm_v0 = np.sqrt(state.grid.dx * np.sum(data.v0**2))
        assert bound == pytest.approx(norm_v0, rel=1e-12)  # v1 = 0: bound constant
        for t in (1.0, 8.0, 30.0):
            assert l2_norm(evolve(state, t), state) <= norm_v0 * (1 + 1e-12)


class TestSupBound:
    def test_modal_l1_dominates_everywhere(self, moving_state, grid):
        _, state = moving_state
        rng = np.random.default_rng(17)
        for _ in range(25):
            t = float(rng.uniform(0.2, 8.0))
            snap = evolve(state, t)
            j = int(rng.integers(0, grid.n_modes))
            assert abs(snap.u[j]) <= sup_bound(t, float(grid.x[j]), state)

    def test_center_point_late_time(self, resting_state):
        _, state = resting_state
        snap = evolve(state, 8.0)
        mid = state.grid.n_modes // 2
        assert abs(snap.u[mid]) <= sup_bound(8.0, 0.0, state)

    def test_geometric_branch_decays_like_inverse_time(self, moving_state):
        # For large t the min is the (1+|x|)/t branch, so doubling t halves it.
        _, state = moving_state
        b1 = sup_bound(1e3, 0.0, state)
        b2 = sup_bound(2e3, 0.0, state)
        assert b2 == pytest.approx(b1 / 2, rel=1e-6)

    def test_requires_positive_time(self, moving_state):
        _, state = moving_state
        with pytest.raises(ValueError):
            sup_bound(0.0, 0.0, state)

    def test_flags_non_integrable_velocity_data(self, grid):
        # v1_hat(0) != 0 makes v1_hat/(w w') behave like 1/xi near 0.
        data = gaussian_initial_data(0.0, grid)
        bad_v1 = 0.3 * np.exp(-grid.xi**2 / 8.0) + 0j
        state = prepare_state(data.v0_hat, bad_v1, grid, DEFAULTS)
        with pytest.raises(NonIntegrableDataError):
            sup_bound(1.0, 0.0, state)


class TestTrackSeries:
    def test_fig7_style_run(self, resting_state):
        _, state = resting_state
        series = track_series(state, np.arange(0.0, 9.0))
        assert series.metadata["max_energy_drift"] <= 1e-8
        assert series.metadata["max_abs_momentum"] <= 1e-10
        assert np.all(series.l2_norm_u <= series.l2_bound + 1e-12)
        assert series.energy.shape == (9,)

    def test_conserved_angular_momentum_column(self, moving_state):
        _, state = moving_state
        series = track_series(state, [0.0, 2.0, 4.0, 8.0])
        assert np.max(np.abs(series.angular_momentum - np.pi)) <= 1e-6

    def test_classical_evolver_hook(self, resting_state, grid):
        _, state = resting_state
        omega_cl = np.abs(grid.xi)
        series = track_series(
            state,
            [0.0, 2.0, 4.0],
            omega_k=omega_cl,
            evolver=lambda st, t: classical_evolve(st, t, 1.0),
        )
        assert series.metadata["max_energy_drift"] <= 1e-8

    def test_rejects_unsorted_times(self, resting_state):
        _, state = resting_state
        with pytest.raises(ValueError):
            track_series(state, [1.0, 0.5])
