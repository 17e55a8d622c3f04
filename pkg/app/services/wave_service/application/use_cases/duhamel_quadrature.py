import logging
import math
from typing import Optional, Sequence

from app.services.spectral_service.domain.entities.spectral_field import SpectralField2D
from app.services.spectral_service.domain.value_objects.grid_spec import GridSpec
from app.services.wave_service.domain.entities.wave_state import WaveState
from app.services.wave_service.domain.enums.sampling import Sampling
from app.services.wave_service.domain.exceptions.wave_errors import InvalidArgumentError

# Configure logger
logger = logging.getLogger(__name__)


class DuhamelQuadratureUseCase:
    """
    Zero-data solution of Box n = Laplacian(G) by time-stepped Duhamel quadrature.

    G is taken piecewise constant on every step of length dt and each step is
    integrated exactly by a forced harmonic oscillator per mode.
    """

    def execute(self, g_history: Sequence[SpectralField2D], dt: float, t: float,
                sampling: Sampling = Sampling.MIDPOINT,
                grid: Optional[GridSpec] = None) -> WaveState:
        n_steps = self._step_count(dt, t)
        sampling = Sampling(sampling)
        required = n_steps + 1 if sampling is Sampling.ENDPOINT and n_steps > 0 else n_steps
        if len(g_history) < required:
            raise InvalidArgumentError(
                f"Duhamel history holds {len(g_history)} snapshots, {required} needed to reach t={t}",
                errors={"available": len(g_history), "required": required}
            )

        if grid is None:
            if not g_history:
                raise InvalidArgumentError("Empty history needs an explicit grid")
            grid = g_history[0].grid

        state = WaveState.zeros(grid)
        for j in range(n_steps):
            if sampling is Sampling.MIDPOINT:
                forcing = g_history[j]
            else:
                forcing = (g_history[j] + g_history[j + 1]).scaled(0.5)
            state = state.forced_step(forcing, dt)

        logger.debug(f"Duhamel quadrature: {n_steps} steps of {dt} ({sampling})")
        return state

    @staticmethod
    def _step_count(dt: float, t: float) -> int:
        if not (math.isfinite(dt) and dt > 0):
            raise InvalidArgumentError(f"dt must be positive and finite, got {dt}")
        if not (math.isfinite(t) and t >= 0):
            raise InvalidArgumentError(f"t must be nonnegative and finite, got {t}")
        n_steps = int(round(t / dt))
        if abs(n_steps * dt - t) > 1e-9 * max(1.0, t):
            raise InvalidArgumentError(f"t={t} is not a multiple of dt={dt}")
        return n_steps
