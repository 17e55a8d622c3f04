from dataclasses import dataclass, field
from typing import List, Optional

from app.services.diagnostics_service.domain.entities.diagnostics_record import DiagnosticsRecord
from app.services.solver_service.domain.entities.initial_data import InitialData
from app.services.solver_service.domain.entities.zakharov_state import ZakharovState
from app.services.solver_service.domain.value_objects.split_step_config import SplitStepConfig
from app.services.spectral_service.domain.entities.spectral_field import SpectralField2D
from app.services.wave_service.domain.entities.wave_state import WaveState


@dataclass
class Trajectory:
    """Checkpointed states of one run with the records taken along the way.

    ``duhamel_states[i]`` is the zero-data Duhamel response accumulated up to
    ``checkpoints[i]``; it is empty for resumed runs.
    """
    data: InitialData
    config: SplitStepConfig
    checkpoints: List[ZakharovState] = field(default_factory=list)
    checkpoint_steps: List[int] = field(default_factory=list)
    duhamel_states: List[WaveState] = field(default_factory=list)
    records: List[DiagnosticsRecord] = field(default_factory=list)
    density_history: Optional[List[SpectralField2D]] = None
    resumed: bool = False

    @property
    def final_state(self) -> ZakharovState:
        return self.checkpoints[-1]

    @property
    def times(self) -> List[float]:
        return [state.t for state in self.checkpoints]
