from dataclasses import dataclass
from typing import Optional

from app.services.solver_service.domain.entities.zakharov_state import ZakharovState
from app.services.solver_service.domain.value_objects.split_step_config import SplitStepConfig
from app.services.spectral_service.domain.entities.spectral_field import SpectralField2D


@dataclass(frozen=True)
class StepResult:
    state: ZakharovState
    density_hat: SpectralField2D   # |u|^2 at the step midpoint


class StrangStepUseCase:
    """
    One step of L(dt/2) N(dt) L(dt/2). Both sub-flows are exact, so the
    step is time-reversible and conserves mass to rounding.
    """

    def execute(self, state: ZakharovState, config: SplitStepConfig,
                dt: Optional[float] = None) -> StepResult:
        dt = config.dt if dt is None else dt
        dealias = config.dealias and state.grid.dealias_enabled

        half = state.linear_flow(0.5 * dt)
        coupled, density_hat = half.coupling_flow(dt, dealias=dealias)
        return StepResult(coupled.linear_flow(0.5 * dt), density_hat)
