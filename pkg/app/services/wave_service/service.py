import logging
from typing import Optional, Sequence

import numpy as np

from app.services.spectral_service.domain.entities.spectral_field import SpectralField2D
from app.services.spectral_service.domain.value_objects.grid_spec import GridSpec
from app.services.wave_service.application.use_cases.duhamel_quadrature import DuhamelQuadratureUseCase
from app.services.wave_service.domain.entities.wave_state import WaveState
from app.services.wave_service.domain.enums.sampling import Sampling
from app.services.wave_service.domain.value_objects.cone_weight_spec import ConeWeightSpec
from app.services.wave_service.domain.value_objects.negative_sobolev import (
    curl_free_potential,
    hhat_minus1_norm,
)

# Configure logger
logger = logging.getLogger(__name__)


class WaveService:
    """
    Exact Fourier-side wave machinery: free propagator W(a,b), the Duhamel
    operator Box^-1, cone weights and the H-hat^-1 norm.
    """

    def __init__(self):
        self._duhamel_use_case = DuhamelQuadratureUseCase()
        logger.debug("Wave service initialized")

    def free_wave_propagate(self, w: WaveState, t: float) -> WaveState:
        return w.validate().propagated(t)

    def forced_oscillator_step(self, w: WaveState, g_hat: SpectralField2D, dt: float) -> WaveState:
        return w.forced_step(g_hat, dt)

    def duhamel_boxinv(self, g_history: Sequence[SpectralField2D], dt: float, t: float,
                       sampling: Sampling = Sampling.MIDPOINT,
                       grid: Optional[GridSpec] = None) -> WaveState:
        return self._duhamel_use_case.execute(g_history, dt, t, sampling, grid)

    def cone_weight(self, k, lam: float, spec: ConeWeightSpec) -> float:
        """Weight at one wavevector k (2-vector) and frequency lambda."""
        k_abs = float(np.linalg.norm(np.asarray(k, dtype=float)))
        return float(spec.weight(k_abs, lam))

    def hhat_minus1_norm(self, b_hat: SpectralField2D) -> float:
        return hhat_minus1_norm(b_hat)

    def curl_free_potential(self, b_hat: SpectralField2D) -> tuple:
        return curl_free_potential(b_hat)
