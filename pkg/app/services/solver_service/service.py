import logging
from pathlib import Path
from typing import List, Optional, Union

from app.services.diagnostics_service.domain.value_objects.diagnostics_schedule import DiagnosticsSchedule
from app.services.diagnostics_service.service import DiagnosticsService
from app.services.solver_service.application.use_cases.duhamel_check import (
    DuhamelCheckUseCase,
    DuhamelResidual,
)
from app.services.solver_service.application.use_cases.lifetime import lifetime_estimate
from app.services.solver_service.application.use_cases.simulate import CheckpointSink, SimulateUseCase
from app.services.solver_service.application.use_cases.strang_step import StepResult, StrangStepUseCase
from app.services.solver_service.domain.entities.initial_data import InitialData
from app.services.solver_service.domain.entities.trajectory import Trajectory
from app.services.solver_service.domain.entities.zakharov_state import ZakharovState
from app.services.solver_service.domain.value_objects.split_step_config import SplitStepConfig
from app.services.solver_service.infrastructure.persistence.checkpoint_repository import CheckpointRepository

# Configure logger
logger = logging.getLogger(__name__)


class SolverService:
    """
    Strang-split time evolution of the Zakharov system, the Duhamel
    consistency check and checkpoint persistence.
    """

    def __init__(self, diagnostics_service: Optional[DiagnosticsService] = None,
                 checkpoint_repository: Optional[CheckpointRepository] = None):
        self._diagnostics = diagnostics_service or DiagnosticsService()
        self._checkpoints = checkpoint_repository or CheckpointRepository()
        self._strang_step_use_case = StrangStepUseCase()
        self._simulate_use_case = SimulateUseCase(self._strang_step_use_case)
        self._duhamel_check_use_case = DuhamelCheckUseCase()
        logger.info("Solver service initialized")

    def linear_flow(self, state: ZakharovState, dt: float) -> ZakharovState:
        return state.linear_flow(dt)

    def coupling_flow(self, state: ZakharovState, dt: float, dealias: bool = True) -> ZakharovState:
        new_state, _ = state.coupling_flow(dt, dealias)
        return new_state

    def strang_step(self, state: ZakharovState, config: SplitStepConfig,
                    dt: Optional[float] = None) -> ZakharovState:
        return self._strang_step_use_case.execute(state, config, dt).state

    def strang_step_with_density(self, state: ZakharovState, config: SplitStepConfig) -> StepResult:
        return self._strang_step_use_case.execute(state, config)

    def simulate(self, data: InitialData, t_final: float, config: SplitStepConfig,
                 schedule: Optional[DiagnosticsSchedule] = None,
                 start: Optional[ZakharovState] = None,
                 on_checkpoint: Optional[CheckpointSink] = None) -> Trajectory:
        recorder = None
        if schedule is not None:
            def recorder(state):
                return self._diagnostics.record(state, schedule, data)

        logger.info(f"Starting simulation to T={t_final} with dt={config.dt}")
        try:
            return self._simulate_use_case.execute(data, t_final, config, recorder, start, on_checkpoint)
        except Exception as e:
            logger.error(f"Simulation failed: {str(e)}", exc_info=True)
            raise

    def duhamel_check(self, trajectory: Trajectory, from_history: bool = False) -> List[DuhamelResidual]:
        return self._duhamel_check_use_case.execute(trajectory, from_history)

    def lifetime_estimate(self, h1_norm: float, alpha: float, c: float) -> float:
        return lifetime_estimate(h1_norm, alpha, c)

    def save_checkpoint(self, state: ZakharovState, path: Union[str, Path]) -> Path:
        return self._checkpoints.save(state, path)

    def load_checkpoint(self, path: Union[str, Path]) -> ZakharovState:
        try:
            return self._checkpoints.load(path)
        except Exception as e:
            logger.error(f"Failed to load checkpoint {path}: {str(e)}", exc_info=True)
            raise
