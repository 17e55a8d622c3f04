from dataclasses import dataclass, replace

import numpy as np

from app.services.spectral_service.domain.entities.spectral_field import SpectralField2D
from app.services.spectral_service.domain.value_objects.grid_spec import GridSpec
from app.services.wave_service.domain.entities.wave_state import WaveState
from app.services.wave_service.domain.exceptions.wave_errors import StateInvariantError


@dataclass(frozen=True)
class ZakharovState:
    """(u, n, ndot) at time t, all held as Fourier coefficients."""
    u_hat: SpectralField2D
    wave: WaveState
    t: float = 0.0

    def __post_init__(self):
        if self.u_hat.grid != self.wave.grid:
            raise StateInvariantError("u_hat and the wave pair must share one grid")

    @property
    def grid(self) -> GridSpec:
        return self.u_hat.grid

    def is_finite(self) -> bool:
        return bool(
            np.all(np.isfinite(self.u_hat.coeffs))
            and np.all(np.isfinite(self.wave.n_hat.coeffs))
            and np.all(np.isfinite(self.wave.ndot_hat.coeffs))
        )

    def mass(self) -> float:
        return self.u_hat.l2_norm()

    def linear_flow(self, dt: float) -> "ZakharovState":
        """Free Schrodinger phase exp(-i|k|^2 dt) on u, free wave flow on (n, ndot)."""
        phase = np.exp(-1j * self.grid.k_squared * dt)
        return ZakharovState(
            u_hat=self.u_hat.with_coeffs(phase * self.u_hat.coeffs),
            wave=self.wave.propagated(dt),
            t=self.t + dt,
        )

    def coupling_flow(self, dt: float, dealias: bool = True) -> tuple:
        """Exact flow of u_t = -i n u, n_t = 0, ndot_t = Laplacian |u|^2.

        |u| is pointwise invariant under this flow, hence so is |u|^2 and the
        forcing; n stays frozen. Returns the new state (time unchanged) and the
        density |u|^2 in Fourier space that drove the step.
        """
        grid = self.grid
        u = grid.inverse(self.u_hat.coeffs)
        density_hat = SpectralField2D.from_physical(grid, np.abs(u) ** 2, real_valued=True)
        if dealias:
            density_hat = density_hat.dealias()

        n_physical = self.wave.n_hat.to_physical()
        u_new = np.exp(-1j * dt * n_physical) * u
        ndot_new = self.wave.ndot_hat + density_hat.laplacian().scaled(dt)

        state = ZakharovState(
            u_hat=self.u_hat.with_coeffs(grid.forward(u_new)),
            wave=WaveState(self.wave.n_hat, ndot_new),
            t=self.t,
        )
        return state, density_hat

    def at_time(self, t: float) -> "ZakharovState":
        return replace(self, t=t)
