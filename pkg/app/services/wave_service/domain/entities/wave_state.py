import math
from dataclasses import dataclass

import numpy as np

from app.services.spectral_service.domain.entities.spectral_field import SpectralField2D
from app.services.spectral_service.domain.value_objects.grid_spec import GridSpec
from app.services.wave_service.domain.exceptions.wave_errors import (
    InvalidArgumentError,
    StateInvariantError,
)
from app.services.wave_service.domain.value_objects.oscillator import rotate_oscillators

INVARIANT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class WaveState:
    """Fourier pair (n_hat, ndot_hat) of the real wave field and its time derivative."""
    n_hat: SpectralField2D
    ndot_hat: SpectralField2D

    def __post_init__(self):
        if self.n_hat.grid != self.ndot_hat.grid:
            raise StateInvariantError("n_hat and ndot_hat must share one grid")

    @classmethod
    def zeros(cls, grid: GridSpec) -> "WaveState":
        return cls(SpectralField2D.zeros(grid), SpectralField2D.zeros(grid))

    @property
    def grid(self) -> GridSpec:
        return self.n_hat.grid

    def validate(self, tolerance: float = INVARIANT_TOLERANCE) -> "WaveState":
        """Check reality of both fields and the mean-free time derivative."""
        for name, field in (("n_hat", self.n_hat), ("ndot_hat", self.ndot_hat)):
            defect = field.hermitian_defect()
            if defect > tolerance:
                raise StateInvariantError(
                    f"{name} is not Hermitian-symmetric (defect {defect:.3e})",
                    errors={"field": name, "defect": defect}
                )
        if not self.ndot_hat.is_mean_free(tolerance):
            raise StateInvariantError(
                f"ndot_hat has a nonzero mean ({self.ndot_hat.zero_mode:.3e})",
                errors={"field": "ndot_hat", "zero_mode": abs(self.ndot_hat.zero_mode)}
            )
        return self

    def propagated(self, t: float) -> "WaveState":
        """Free wave flow W over time t (exact per mode)."""
        n_new, ndot_new = rotate_oscillators(self.grid, self.n_hat.coeffs, self.ndot_hat.coeffs, t)
        return WaveState(self.n_hat.with_coeffs(n_new), self.ndot_hat.with_coeffs(ndot_new))

    def forced_step(self, g_hat: SpectralField2D, dt: float) -> "WaveState":
        """Exact flow of n_tt = -|k|^2 (n + g) with g frozen over [0, dt].

        Shifting m = n + g turns every mode into a free oscillator.
        """
        if not math.isfinite(dt):
            raise InvalidArgumentError(f"dt must be finite, got {dt}")
        shifted = self.n_hat.coeffs + g_hat.coeffs
        m_new, ndot_new = rotate_oscillators(self.grid, shifted, self.ndot_hat.coeffs, dt)
        return WaveState(self.n_hat.with_coeffs(m_new - g_hat.coeffs),
                         self.ndot_hat.with_coeffs(ndot_new))

    def mode_energy(self) -> np.ndarray:
        """|ndot_hat|^2/|k|^2 + |n_hat|^2 per mode (k = 0 contributes |n_hat|^2)."""
        k_squared = self.grid.k_squared
        ratio = np.zeros_like(k_squared)
        nonzero = k_squared > 0
        ratio[nonzero] = np.abs(self.ndot_hat.coeffs[nonzero]) ** 2 / k_squared[nonzero]
        return ratio + np.abs(self.n_hat.coeffs) ** 2

    def __sub__(self, other: "WaveState") -> "WaveState":
        return WaveState(self.n_hat - other.n_hat, self.ndot_hat - other.ndot_hat)

    def __add__(self, other: "WaveState") -> "WaveState":
        return WaveState(self.n_hat + other.n_hat, self.ndot_hat + other.ndot_hat)
