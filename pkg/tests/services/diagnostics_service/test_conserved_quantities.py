import numpy as np
import pytest

from app.services.diagnostics_service.domain.exceptions.diagnostics_errors import UnsupportedOrderError
from app.services.diagnostics_service.domain.value_objects.diagnostics_schedule import DiagnosticsSchedule
from app.services.diagnostics_service.service import DiagnosticsService
from app.services.solver_service.application.use_cases.strang_step import StrangStepUseCase
from app.services.solver_service.domain.entities.initial_data import InitialData
from app.services.solver_service.domain.entities.zakharov_state import ZakharovState
from app.services.solver_service.domain.value_objects.split_step_config import SplitStepConfig
from app.services.solver_service.service import SolverService
from app.services.spectral_service.domain.entities.spectral_field import SpectralField2D
from app.services.wave_service.domain.entities.wave_state import WaveState
from tests.conftest import real_mode, smooth_data


@pytest.fixture
def diagnostics():
    return DiagnosticsService()


def evolved_state(data, steps=20, dt=0.05):
    config = SplitStepConfig(dt=dt)
    state = data.initial_state()
    use_case = StrangStepUseCase()
    for _ in range(steps):
        state = use_case.execute(state, config).state
    return state


class TestHamiltonian:

    def test_kinetic_term_of_plane_wave(self, diagnostics, small_grid):
        u = SpectralField2D.plane_wave(small_grid, 2, 1, 0.3)
        state = ZakharovState(u, WaveState.zeros(small_grid))
        assert diagnostics.hamiltonian(state) == pytest.approx(5.0 * u.l2_norm() ** 2)

    def test_wave_term(self, diagnostics, small_grid):
        n = real_mode(small_grid, 1, 0, 0.2)
        ndot = real_mode(small_grid, 0, 2, 0.4)
        state = ZakharovState(SpectralField2D.zeros(small_grid, real_valued=False), WaveState(n, ndot))
        expected = 0.5 * (n.l2_norm() ** 2 + (ndot.l2_norm() / 2.0) ** 2)
        assert diagnostics.hamiltonian(state) == pytest.approx(expected)

    def test_coupling_term(self, diagnostics, small_grid):
        u = SpectralField2D.plane_wave(small_grid, 1, 1, 0.5)
        n = real_mode(small_grid, 0, 0, 2.0)
        state = ZakharovState(u, WaveState(n, SpectralField2D.zeros(small_grid)))
        kinetic = 2.0 * u.l2_norm() ** 2
        wave = 0.5 * n.l2_norm() ** 2
        coupling = 2.0 * u.l2_norm() ** 2
        assert diagnostics.hamiltonian(state) == pytest.approx(kinetic + wave + coupling)

    def test_conserved_along_run(self, small_grid):
        data = smooth_data(small_grid)
        trajectory = SolverService().simulate(data, 2.0, SplitStepConfig(dt=0.01, checkpoint_every=20),
                                              DiagnosticsSchedule())
        energies = np.array([r.hamiltonian for r in trajectory.records])
        assert np.max(np.abs(energies - energies[0])) < 1e-3 * abs(energies[0])

    @pytest.mark.slow
    def test_drift_is_second_order(self, small_grid):
        data = smooth_data(small_grid, amplitude=0.3)
        drifts = []
        for dt, every in ((0.02, 5), (0.01, 10), (0.005, 20)):
            trajectory = SolverService().simulate(data, 1.0, SplitStepConfig(dt=dt, checkpoint_every=every),
                                                  DiagnosticsSchedule())
            energies = np.array([r.hamiltonian for r in trajectory.records])
            drifts.append(np.max(np.abs(energies - energies[0])) / abs(energies[0]))
        ratios = np.array(drifts[:-1]) / np.array(drifts[1:])
        assert np.all((ratios >= 3.0) & (ratios <= 5.0))


class TestRecord:

    def test_fields(self, diagnostics, zakharov_data):
        state = zakharov_data.initial_state()
        record = diagnostics.record(state, DiagnosticsSchedule(s_values=[0, 3]))
        assert record.mass == pytest.approx(state.u_hat.l2_norm())
        assert record.hs_norms[0.0] == pytest.approx(record.mass)
        assert record.hs_norms[3.0] == pytest.approx(state.u_hat.sobolev_norm(3))
        assert record.increment is None

    def test_h1_triple_at_start(self, diagnostics, small_grid):
        data = smooth_data(small_grid)
        record = diagnostics.record(data.initial_state(), DiagnosticsSchedule())
        assert record.h1_triple == pytest.approx(data.h1_norm())

    def test_increment_needs_data(self, diagnostics, zakharov_data):
        schedule = DiagnosticsSchedule(increment=True)
        state = zakharov_data.initial_state()
        assert diagnostics.record(state, schedule).increment is None
        assert diagnostics.record(state, schedule, zakharov_data).increment is not None


class TestIncrementDecomposition:

    @pytest.mark.parametrize("s", [2, 4])
    def test_linear_part_vanishes(self, diagnostics, zakharov_data, s):
        state = evolved_state(zakharov_data)
        terms = diagnostics.increment_decomposition(state, zakharov_data, s)
        scale = float(np.sum(state.grid.k_abs ** (2 * s + 2) * np.abs(state.u_hat.coeffs) ** 2))
        assert abs(terms.i1) <= 1e-12 * scale

    def test_terms_add_up(self, diagnostics, zakharov_data):
        state = evolved_state(zakharov_data)
        terms = diagnostics.increment_decomposition(state, zakharov_data, 2)
        assert abs(terms.defect) <= 1e-10 * (abs(terms.i_total) + abs(terms.i2) + abs(terms.i3))

    def test_cubic_part_vanishes_at_start(self, diagnostics, zakharov_data):
        terms = diagnostics.increment_decomposition(zakharov_data.initial_state(), zakharov_data, 2)
        assert terms.i3 == pytest.approx(0.0, abs=1e-12 * abs(terms.i2))

    def test_matches_finite_difference(self, diagnostics, zakharov_data):
        state = evolved_state(zakharov_data)
        h = 1e-3
        config = SplitStepConfig(dt=h, dealias=False)
        use_case = StrangStepUseCase()
        forward = use_case.execute(state, config).state
        backward = use_case.execute(state, config, dt=-h).state

        def weighted(s):
            return float(np.sum(s.grid.k_abs ** 4 * np.abs(s.u_hat.coeffs) ** 2))

        difference = (weighted(forward) - weighted(backward)) / (2 * h)
        terms = diagnostics.increment_decomposition(state, zakharov_data, 2)
        assert terms.i_total == pytest.approx(difference, rel=1e-3)

    @pytest.mark.parametrize("s", [0, 1, 3, 2.5])
    def test_rejects_orders(self, diagnostics, zakharov_data, s):
        with pytest.raises(UnsupportedOrderError):
            diagnostics.increment_decomposition(zakharov_data.initial_state(), zakharov_data, s)


class TestCancellation:

    @pytest.mark.parametrize("s", [2, 4, 6])
    def test_probe_is_rounding_level(self, diagnostics, zakharov_data, s):
        state = evolved_state(zakharov_data)
        scale = state.u_hat.apply_B(s).l2_norm() ** 2 * np.max(np.abs(state.wave.n_hat.to_physical()))
        assert abs(diagnostics.cancellation_probe(state, s)) <= 1e-12 * scale


def random_real(grid, rng, mean_free=False):
    field = SpectralField2D.from_physical(grid, rng.standard_normal(grid.shape)).dealias()
    if not mean_free:
        return field
    coeffs = field.coeffs.copy()
    coeffs[0, 0] = 0.0
    return field.with_coeffs(coeffs)


def random_data(grid, rng):
    values = rng.standard_normal(grid.shape) + 1j * rng.standard_normal(grid.shape)
    phi = SpectralField2D.from_physical(grid, values).dealias()
    return InitialData(phi, random_real(grid, rng), random_real(grid, rng, mean_free=True))


class TestExactCancellations:
    """Both cancellations at rounding level over many random states."""

    @pytest.mark.parametrize("s", [2, 4])
    def test_random_states(self, diagnostics, small_grid, rng, s):
        for _ in range(100):
            data = random_data(small_grid, rng)
            state = data.initial_state()
            terms = diagnostics.increment_decomposition(state, data, s)
            linear_scale = float(np.sum(small_grid.k_abs ** (2 * s + 2) * np.abs(state.u_hat.coeffs) ** 2))
            assert abs(terms.i1) <= 1e-12 * linear_scale
            coupling_scale = (state.u_hat.apply_B(s).l2_norm() ** 2
                              * np.max(np.abs(state.wave.n_hat.to_physical())))
            assert abs(diagnostics.cancellation_probe(state, s)) <= 1e-12 * coupling_scale


class TestGrowthConsistency:

    @pytest.mark.slow
    def test_long_run_respects_growth_bound(self, diagnostics, small_grid):
        data = smooth_data(small_grid, amplitude=0.05)
        schedule = DiagnosticsSchedule(s_values=[2, 4])
        trajectory = SolverService().simulate(data, 100.0, SplitStepConfig(dt=0.02, checkpoint_every=50),
                                              schedule)
        assert trajectory.records[-1].t == pytest.approx(100.0)
        for s in (2, 4):
            fit = diagnostics.fit_growth(trajectory.records, s, 10.0)
            assert fit.n_records >= 80
            assert diagnostics.check_growth_bound(fit)
