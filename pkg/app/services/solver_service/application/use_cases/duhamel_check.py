import logging
import math
from dataclasses import dataclass
from typing import List, Optional

from app.services.solver_service.domain.entities.trajectory import Trajectory
from app.services.solver_service.domain.exceptions.solver_errors import DuhamelUnavailableError
from app.services.wave_service.application.use_cases.duhamel_quadrature import DuhamelQuadratureUseCase
from app.services.wave_service.domain.entities.wave_state import WaveState
from app.services.wave_service.domain.enums.sampling import Sampling

# Configure logger
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DuhamelResidual:
    t: float
    residual: float


class DuhamelCheckUseCase:
    """
    Residual of n = W(a, b) + Box^-1 Laplacian |u|^2 at every checkpoint,
    as ||n - W(a,b)(t) - Box^-1(...)(t)|| / (||n|| + 1).
    """

    def __init__(self, quadrature: Optional[DuhamelQuadratureUseCase] = None):
        self._quadrature = quadrature or DuhamelQuadratureUseCase()

    def execute(self, trajectory: Trajectory, from_history: bool = False) -> List[DuhamelResidual]:
        if trajectory.resumed:
            raise DuhamelUnavailableError(
                "A resumed trajectory carries no |u|^2 history from t = 0; rerun without --resume"
            )
        dt = trajectory.config.dt
        if from_history:
            if trajectory.density_history is None:
                raise DuhamelUnavailableError("Trajectory was run without keep_density_history")
            if any(not math.isclose(state.t, step * dt, rel_tol=1e-9, abs_tol=1e-12)
                   for state, step in zip(trajectory.checkpoints, trajectory.checkpoint_steps)):
                raise DuhamelUnavailableError("History quadrature needs checkpoints on the dt lattice; "
                                              "T is not a multiple of dt")
            duhamel_states = [
                self._quadrature.execute(trajectory.density_history[:step], dt, step * dt,
                                         Sampling.MIDPOINT, trajectory.data.grid)
                for step in trajectory.checkpoint_steps
            ]
        else:
            duhamel_states = trajectory.duhamel_states

        residuals = []
        for state, duhamel in zip(trajectory.checkpoints, duhamel_states):
            residuals.append(DuhamelResidual(state.t, self._residual(trajectory, state.wave, state.t, duhamel)))
        logger.info(f"Duhamel check over {len(residuals)} checkpoints, "
                    f"max residual {max((r.residual for r in residuals), default=0.0):.3e}")
        return residuals

    @staticmethod
    def _residual(trajectory: Trajectory, wave: WaveState, t: float, duhamel: WaveState) -> float:
        free = trajectory.data.free_wave_at(t)
        defect = wave.n_hat - free.n_hat - duhamel.n_hat
        return defect.l2_norm() / (wave.n_hat.l2_norm() + 1.0)
