import logging
from typing import Optional, Sequence

from app.services.diagnostics_service.application.use_cases.conserved_quantities import (
    RecordDiagnosticsUseCase,
    hamiltonian,
)
from app.services.diagnostics_service.application.use_cases.fit_growth import FitGrowthUseCase
from app.services.diagnostics_service.application.use_cases.increment_decomposition import (
    IncrementDecompositionUseCase,
    cancellation_probe,
)
from app.services.diagnostics_service.application.use_cases.iterate_local_bound import IterateLocalBoundUseCase
from app.services.diagnostics_service.domain.entities.bound_iteration import BoundIteration
from app.services.diagnostics_service.domain.entities.diagnostics_record import (
    DiagnosticsRecord,
    IncrementTerms,
)
from app.services.diagnostics_service.domain.entities.growth_fit import GrowthFit
from app.services.diagnostics_service.domain.value_objects.diagnostics_schedule import DiagnosticsSchedule
from app.services.diagnostics_service.domain.value_objects.growth_bounds import (
    delta_from_order,
    predicted_exponent,
)
from app.services.solver_service.domain.entities.initial_data import InitialData
from app.services.solver_service.domain.entities.zakharov_state import ZakharovState
from app.services.wave_service.domain.exceptions.wave_errors import InvalidArgumentError

# Configure logger
logger = logging.getLogger(__name__)


class DiagnosticsService:
    """
    Conserved quantities, H^s tracking, the increment decomposition,
    growth-exponent fits and the bound-iteration recurrence.
    """

    def __init__(self):
        self._increment_use_case = IncrementDecompositionUseCase()
        self._record_use_case = RecordDiagnosticsUseCase(self._increment_use_case)
        self._fit_growth_use_case = FitGrowthUseCase()
        self._iterate_use_case = IterateLocalBoundUseCase()
        logger.debug("Diagnostics service initialized")

    def hamiltonian(self, state: ZakharovState) -> float:
        return hamiltonian(state)

    def record(self, state: ZakharovState, schedule: DiagnosticsSchedule,
               data: Optional[InitialData] = None) -> DiagnosticsRecord:
        return self._record_use_case.execute(state, schedule, data)

    def increment_decomposition(self, state: ZakharovState, data: InitialData, s) -> IncrementTerms:
        return self._increment_use_case.execute(state, data, s)

    def cancellation_probe(self, state: ZakharovState, s) -> float:
        return cancellation_probe(state, s)

    def fit_growth(self, records: Sequence[DiagnosticsRecord], s: float, t_min: float) -> GrowthFit:
        try:
            return self._fit_growth_use_case.execute(records, s, t_min)
        except Exception as e:
            logger.error(f"Growth fit failed: {str(e)}", exc_info=True)
            raise

    def iterate_local_bound(self, c: float, delta: Optional[float], x0: float, steps: int,
                            s: Optional[float] = None) -> BoundIteration:
        """Iterate the recurrence; ``s`` may stand in for ``delta = 1/(s-1)``."""
        if delta is None:
            if s is None:
                raise InvalidArgumentError("iterate_local_bound needs delta or s")
            delta = delta_from_order(s)
        return self._iterate_use_case.execute(c, delta, x0, steps)

    def check_growth_bound(self, fit: GrowthFit, slack: float = 0.5) -> bool:
        within = fit.exponent_alpha <= predicted_exponent(fit.s) + slack
        if not within:
            logger.warning(
                f"Fitted exponent {fit.exponent_alpha:.4f} for s={fit.s} exceeds "
                f"(s-1)_+ + {slack}; run the convergence study before reporting it"
            )
        return within
