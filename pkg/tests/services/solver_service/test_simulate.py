import math

import numpy as np
import pytest

from app.services.diagnostics_service.domain.value_objects.diagnostics_schedule import DiagnosticsSchedule
from app.services.run_service.application.use_cases.initial_condition_factory import InitialConditionFactory
from app.services.run_service.domain.value_objects.run_config import DataSection
from app.services.solver_service.domain.entities.zakharov_state import ZakharovState
from app.services.solver_service.domain.exceptions.solver_errors import (
    CheckpointFormatError,
    DuhamelUnavailableError,
    InstabilityError,
)
from app.services.solver_service.domain.value_objects.split_step_config import SplitStepConfig
from app.services.solver_service.infrastructure.persistence.checkpoint_repository import (
    HEADER_DTYPE,
    CheckpointRepository,
)
from app.services.solver_service.service import SolverService
from app.services.spectral_service.domain.value_objects.grid_spec import GridSpec
from app.services.wave_service.domain.exceptions.wave_errors import InvalidArgumentError
from app.shared.domain.exceptions.common_errors import ResourceNotFoundError


@pytest.fixture
def solver():
    return SolverService()


@pytest.fixture
def config():
    return SplitStepConfig(dt=0.1, checkpoint_every=3)


class TestSimulate:

    def test_checkpoint_steps(self, solver, zakharov_data, config):
        trajectory = solver.simulate(zakharov_data, 1.0, config)
        assert trajectory.checkpoint_steps == [0, 3, 6, 9, 10]
        assert trajectory.times[-1] == pytest.approx(1.0)
        assert len(trajectory.duhamel_states) == 5

    def test_partial_last_step_lands_on_t_final(self, solver, zakharov_data):
        trajectory = solver.simulate(zakharov_data, 0.25, SplitStepConfig(dt=0.1))
        assert trajectory.checkpoint_steps == [0, 3]
        assert trajectory.checkpoints[-1].t == pytest.approx(0.25, abs=1e-14)

    def test_short_last_step_matches_direct_steps(self, solver, zakharov_data):
        trajectory = solver.simulate(zakharov_data, 0.25, SplitStepConfig(dt=0.1))
        config = SplitStepConfig(dt=0.1)
        state = zakharov_data.initial_state()
        for dt in (0.1, 0.1, 0.05):
            state = solver.strang_step(state, config, dt=dt)
        np.testing.assert_allclose(trajectory.checkpoints[-1].u_hat.coeffs, state.u_hat.coeffs, atol=1e-13)
        residuals = solver.duhamel_check(trajectory)
        assert residuals[-1].t == pytest.approx(0.25)
        assert residuals[-1].residual < 1e-2

    def test_records_follow_schedule(self, solver, zakharov_data, config):
        schedule = DiagnosticsSchedule(s_values=[2, 1, 2], increment=True)
        trajectory = solver.simulate(zakharov_data, 0.6, config, schedule)
        assert len(trajectory.records) == len(trajectory.checkpoints)
        record = trajectory.records[-1]
        assert sorted(record.hs_norms) == [1.0, 2.0]
        assert record.increment is not None
        assert record.is_finite()

    def test_mass_conserved_along_run(self, solver, zakharov_data):
        trajectory = solver.simulate(zakharov_data, 2.0, SplitStepConfig(dt=0.02, checkpoint_every=10),
                                     DiagnosticsSchedule())
        masses = np.array([r.mass for r in trajectory.records])
        np.testing.assert_allclose(masses, masses[0], rtol=1e-11)

    @pytest.mark.slow
    def test_mass_conserved_over_long_run(self, solver):
        grid = GridSpec(n_points=128, period=32.0 * math.pi)
        data = InitialConditionFactory().build(grid, DataSection(amplitude=0.1))
        trajectory = solver.simulate(data, 10.0, SplitStepConfig(dt=1e-3, checkpoint_every=1000),
                                     DiagnosticsSchedule(s_values=[1.0]))
        assert trajectory.checkpoint_steps[-1] == 10000
        masses = np.array([r.mass for r in trajectory.records])
        np.testing.assert_allclose(masses / data.phi_hat.l2_norm(), 1.0, atol=1e-11)

    def test_rejects_bad_horizon(self, solver, zakharov_data, config):
        with pytest.raises(InvalidArgumentError):
            solver.simulate(zakharov_data, 0.0, config)

    def test_checkpoint_sink_called(self, solver, zakharov_data, config):
        seen = []
        solver.simulate(zakharov_data, 0.7, config, on_checkpoint=lambda step, state: seen.append(step))
        assert seen == [0, 3, 6, 7]

    def test_nonfinite_state_aborts(self, solver, zakharov_data, config):
        start = zakharov_data.initial_state()
        coeffs = start.u_hat.coeffs.copy()
        coeffs[1, 0] = np.nan
        broken = ZakharovState(start.u_hat.with_coeffs(coeffs), start.wave, 0.0)
        with pytest.raises(InstabilityError) as error:
            solver.simulate(zakharov_data, 1.0, config, start=broken)
        assert error.value.exit_code == 3
        assert error.value.step == 3
        assert error.value.last_good is broken


class TestDuhamelCheck:

    def test_residual_small(self, solver, zakharov_data):
        trajectory = solver.simulate(zakharov_data, 0.5, SplitStepConfig(dt=0.01, checkpoint_every=10))
        residuals = solver.duhamel_check(trajectory)
        assert len(residuals) == len(trajectory.checkpoints)
        assert residuals[0].residual == 0.0
        assert max(r.residual for r in residuals) < 1e-4

    def test_residual_decreases_with_dt(self, solver, zakharov_data):
        worst = []
        for dt in (0.04, 0.02):
            trajectory = solver.simulate(zakharov_data, 0.8, SplitStepConfig(dt=dt, checkpoint_every=1000))
            worst.append(solver.duhamel_check(trajectory)[-1].residual)
        assert worst[1] < worst[0]

    def test_history_matches_streamed(self, solver, zakharov_data):
        config = SplitStepConfig(dt=0.05, checkpoint_every=4, keep_density_history=True)
        trajectory = solver.simulate(zakharov_data, 0.6, config)
        streamed = solver.duhamel_check(trajectory)
        recomputed = solver.duhamel_check(trajectory, from_history=True)
        for a, b in zip(streamed, recomputed):
            assert a.residual == pytest.approx(b.residual, abs=1e-14)

    def test_history_required(self, solver, zakharov_data, config):
        trajectory = solver.simulate(zakharov_data, 0.3, config)
        with pytest.raises(DuhamelUnavailableError):
            solver.duhamel_check(trajectory, from_history=True)

    def test_history_needs_dt_lattice(self, solver, zakharov_data):
        config = SplitStepConfig(dt=0.1, keep_density_history=True)
        trajectory = solver.simulate(zakharov_data, 0.25, config)
        with pytest.raises(DuhamelUnavailableError):
            solver.duhamel_check(trajectory, from_history=True)


class TestCheckpoints:

    def test_round_trip(self, solver, zakharov_data, tmp_path):
        state = solver.strang_step(zakharov_data.initial_state(), SplitStepConfig(dt=0.1))
        path = solver.save_checkpoint(state, tmp_path / "checkpoints" / "step_1.zklb")
        loaded = solver.load_checkpoint(path)
        assert loaded.t == state.t
        assert loaded.grid == state.grid
        np.testing.assert_array_equal(loaded.u_hat.coeffs, state.u_hat.coeffs)
        np.testing.assert_array_equal(loaded.wave.ndot_hat.coeffs, state.wave.ndot_hat.coeffs)
        assert loaded.wave.n_hat.real_valued

    def test_file_size(self, zakharov_data, tmp_path):
        path = CheckpointRepository().save(zakharov_data.initial_state(), tmp_path / "a.zklb")
        assert path.stat().st_size == HEADER_DTYPE.itemsize + 3 * 32 * 32 * 16

    def test_missing(self, solver, tmp_path):
        with pytest.raises(ResourceNotFoundError):
            solver.load_checkpoint(tmp_path / "missing.zklb")

    def test_truncated(self, solver, zakharov_data, tmp_path):
        path = solver.save_checkpoint(zakharov_data.initial_state(), tmp_path / "a.zklb")
        path.write_bytes(path.read_bytes()[:-8])
        with pytest.raises(CheckpointFormatError) as error:
            solver.load_checkpoint(path)
        assert error.value.exit_code == 4

    def test_bad_magic(self, solver, zakharov_data, tmp_path):
        path = solver.save_checkpoint(zakharov_data.initial_state(), tmp_path / "a.zklb")
        path.write_bytes(b"XXXX" + path.read_bytes()[4:])
        with pytest.raises(CheckpointFormatError):
            solver.load_checkpoint(path)

    def test_resume_reproduces_straight_run(self, solver, zakharov_data, tmp_path):
        config = SplitStepConfig(dt=0.05, checkpoint_every=5)
        straight = solver.simulate(zakharov_data, 1.0, config)

        saved = {}
        solver.simulate(zakharov_data, 0.5, config,
                        on_checkpoint=lambda step, state: saved.update({step: state}))
        path = solver.save_checkpoint(saved[10], tmp_path / "step_10.zklb")
        resumed = solver.simulate(zakharov_data, 1.0, config, start=solver.load_checkpoint(path))

        assert resumed.resumed
        assert resumed.checkpoint_steps == [10, 15, 20]
        assert resumed.duhamel_states == []
        np.testing.assert_allclose(resumed.final_state.u_hat.coeffs, straight.final_state.u_hat.coeffs,
                                   atol=1e-13)
        with pytest.raises(DuhamelUnavailableError):
            solver.duhamel_check(resumed)
