import math
from dataclasses import dataclass

from app.services.solver_service.domain.entities.zakharov_state import ZakharovState
from app.services.spectral_service.domain.entities.spectral_field import SpectralField2D
from app.services.spectral_service.domain.value_objects.grid_spec import GridSpec
from app.services.wave_service.domain.entities.wave_state import WaveState
from app.services.wave_service.domain.exceptions.wave_errors import StateInvariantError
from app.services.wave_service.domain.value_objects.negative_sobolev import (
    hhat_minus1_norm,
    require_mean_free,
)


@dataclass(frozen=True)
class InitialData:
    """Data (phi, a, b) for (u, n, ndot) at t = 0."""
    phi_hat: SpectralField2D
    a_hat: SpectralField2D
    b_hat: SpectralField2D

    def __post_init__(self):
        grids = {self.phi_hat.grid, self.a_hat.grid, self.b_hat.grid}
        if len(grids) != 1:
            raise StateInvariantError("phi, a and b must live on one grid")
        require_mean_free(self.b_hat)
        self.wave.validate()

    @property
    def grid(self) -> GridSpec:
        return self.phi_hat.grid

    @property
    def wave(self) -> WaveState:
        return WaveState(self.a_hat, self.b_hat)

    def initial_state(self) -> ZakharovState:
        return ZakharovState(self.phi_hat, self.wave, 0.0)

    def free_wave_at(self, t: float) -> WaveState:
        """W(a, b)(t), the free wave evolved exactly from the stored data."""
        return self.wave.propagated(t)

    def h1_norm(self) -> float:
        """||(phi, a, b)|| in H^1 x L^2 x H-hat^-1."""
        return math.sqrt(
            self.phi_hat.sobolev_norm(1.0) ** 2
            + self.a_hat.l2_norm() ** 2
            + hhat_minus1_norm(self.b_hat) ** 2
        )
