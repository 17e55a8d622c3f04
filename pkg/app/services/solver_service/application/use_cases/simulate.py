import logging
import math
from typing import Callable, Optional

from app.services.diagnostics_service.domain.entities.diagnostics_record import DiagnosticsRecord
from app.services.solver_service.application.use_cases.lifetime import batch_length
from app.services.solver_service.application.use_cases.strang_step import StrangStepUseCase
from app.services.solver_service.domain.entities.initial_data import InitialData
from app.services.solver_service.domain.entities.trajectory import Trajectory
from app.services.solver_service.domain.entities.zakharov_state import ZakharovState
from app.services.solver_service.domain.exceptions.solver_errors import InstabilityError
from app.services.solver_service.domain.value_objects.split_step_config import SplitStepConfig
from app.services.wave_service.domain.entities.wave_state import WaveState
from app.services.wave_service.domain.exceptions.wave_errors import InvalidArgumentError

# Configure logger
logger = logging.getLogger(__name__)

Recorder = Callable[[ZakharovState], DiagnosticsRecord]
CheckpointSink = Callable[[int, ZakharovState], None]


class SimulateUseCase:
    """
    Evolve InitialData to time T with the Strang scheme; when T is not a
    multiple of dt the last step is shortened to land on T.

    Checkpoints sit at every multiple of ``checkpoint_every`` steps (counted
    from t = 0, also for resumed runs) and at the final step. Alongside the
    state the zero-data Duhamel response of the midpoint densities is
    accumulated, one exact forced-oscillator step per solver step.
    """

    def __init__(self, strang_step: Optional[StrangStepUseCase] = None):
        self._strang_step = strang_step or StrangStepUseCase()

    def execute(self, data: InitialData, t_final: float, config: SplitStepConfig,
                recorder: Optional[Recorder] = None,
                start: Optional[ZakharovState] = None,
                on_checkpoint: Optional[CheckpointSink] = None) -> Trajectory:
        if not (math.isfinite(t_final) and t_final > 0):
            raise InvalidArgumentError(f"T must be positive and finite, got {t_final}")

        dt = config.dt
        total_steps = self._step_count(t_final, dt)
        resumed = start is not None
        state = start if resumed else data.initial_state()
        step = int(math.ceil(state.t / dt - 1e-9))
        if step > total_steps:
            raise InvalidArgumentError(
                f"Resume state at t={state.t} lies beyond T={t_final}",
                errors={"t": state.t, "T": t_final}
            )

        trajectory = Trajectory(data=data, config=config, resumed=resumed)
        duhamel = None if resumed else WaveState.zeros(data.grid)
        if config.keep_density_history and not resumed:
            trajectory.density_history = []

        batch = batch_length(data.h1_norm(), dt, config.checkpoint_every,
                             config.lifetime_alpha, config.lifetime_c)
        logger.info(
            f"Simulating {total_steps - step} steps of dt={dt} on N={data.grid.n_points} "
            f"(finiteness check every {batch} steps)"
        )
        if resumed:
            logger.warning(f"Resumed run from t={state.t}: Duhamel history unavailable")

        self._checkpoint(trajectory, state, step, duhamel, recorder, on_checkpoint)
        last_good = state
        while step < total_steps:
            to_checkpoint = config.checkpoint_every - step % config.checkpoint_every
            n_batch = min(batch, to_checkpoint, total_steps - step)
            for offset in range(1, n_batch + 1):
                step_dt = dt if step + offset < total_steps else self._final_step(state.t, t_final, dt)
                result = self._strang_step.execute(state, config, dt=step_dt)
                state = result.state
                if duhamel is not None:
                    duhamel = duhamel.forced_step(result.density_hat, step_dt)
                if trajectory.density_history is not None:
                    trajectory.density_history.append(result.density_hat)
            step += n_batch

            if not state.is_finite():
                logger.error(f"Nonfinite field at step {step} (t={state.t})")
                raise InstabilityError(
                    f"Nonfinite field detected at step {step}, t={state.t:.6g}",
                    last_good=last_good, step=step
                )
            if step % config.checkpoint_every == 0 or step == total_steps:
                self._checkpoint(trajectory, state, step, duhamel, recorder, on_checkpoint)
                last_good = state
            logger.debug(f"Reached step {step}/{total_steps}")

        logger.info(f"Simulation finished at t={state.t} with {len(trajectory.checkpoints)} checkpoints")
        return trajectory

    @staticmethod
    def _step_count(t_final: float, dt: float) -> int:
        return max(1, int(math.ceil(t_final / dt - 1e-9)))

    @staticmethod
    def _final_step(t: float, t_final: float, dt: float) -> float:
        remaining = t_final - t
        return remaining if remaining < dt * (1.0 - 1e-9) else dt

    @staticmethod
    def _checkpoint(trajectory: Trajectory, state: ZakharovState, step: int,
                    duhamel: Optional[WaveState], recorder: Optional[Recorder],
                    on_checkpoint: Optional[CheckpointSink]) -> None:
        trajectory.checkpoints.append(state)
        trajectory.checkpoint_steps.append(step)
        if duhamel is not None:
            trajectory.duhamel_states.append(duhamel)
        if recorder is not None:
            trajectory.records.append(recorder(state))
        if on_checkpoint is not None:
            on_checkpoint(step, state)
