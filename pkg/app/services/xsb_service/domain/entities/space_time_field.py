import math
from dataclasses import dataclass

import numpy as np
import scipy.fft as sfft

from app.services.spectral_service.domain.exceptions.spectral_errors import ShapeMismatchError
from app.services.spectral_service.domain.value_objects.grid_spec import GridSpec
from app.services.xsb_service.domain.exceptions.xsb_errors import WindowContractError
from app.services.xsb_service.domain.value_objects.space_time_lattice import (
    is_power_of_two,
    lambda_axis,
    pad_spectrum,
)
from app.services.xsb_service.domain.value_objects.time_window import TimeWindow
from app.shared.domain.exceptions.common_errors import ConfigurationError


@dataclass(frozen=True)
class SpaceTimeField:
    """
    Samples u(t_j, x) at t_j = j T_win / M over the torus of ``grid``, time-major.

    The space-time transform is scaled so that
    (T_win/M) (L/N)^2 sum |u|^2 == sum |F(k, lambda)|^2, with lambda = 2 pi j / T_win.
    """
    grid: GridSpec
    t_window: float
    samples: np.ndarray
    windowed: bool = False

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=complex)
        if samples.ndim != 3 or samples.shape[1:] != self.grid.shape:
            raise ShapeMismatchError(
                f"Space-time samples of shape {samples.shape} do not fit grid {self.grid.shape}"
            )
        if not is_power_of_two(samples.shape[0]) or samples.shape[0] < 2:
            raise ConfigurationError(f"m_steps must be a power of two >= 2, got {samples.shape[0]}")
        if not (math.isfinite(self.t_window) and self.t_window > 0):
            raise ConfigurationError(f"t_window must be positive, got {self.t_window}")
        object.__setattr__(self, "samples", samples)

    @classmethod
    def from_spectrum(cls, grid: GridSpec, t_window: float, spectrum: np.ndarray,
                      windowed: bool = False) -> "SpaceTimeField":
        scale = cls._scale(grid, t_window, spectrum.shape[0])
        return cls(grid, t_window, sfft.ifftn(spectrum) / scale, windowed)

    @staticmethod
    def _scale(grid: GridSpec, t_window: float, m_steps: int) -> float:
        return (grid.period / grid.n_points ** 2) * math.sqrt(t_window) / m_steps

    @property
    def m_steps(self) -> int:
        return self.samples.shape[0]

    @property
    def times(self) -> np.ndarray:
        return self.t_window * np.arange(self.m_steps) / self.m_steps

    @property
    def lam(self) -> np.ndarray:
        return lambda_axis(self.m_steps, self.t_window)

    def spectrum(self) -> np.ndarray:
        return self._scale(self.grid, self.t_window, self.m_steps) * sfft.fftn(self.samples)

    def with_samples(self, samples: np.ndarray, windowed=None) -> "SpaceTimeField":
        flag = self.windowed if windowed is None else windowed
        return SpaceTimeField(self.grid, self.t_window, samples, flag)

    def scaled(self, factor: complex) -> "SpaceTimeField":
        return self.with_samples(factor * self.samples)

    def apply_window(self, window: TimeWindow) -> "SpaceTimeField":
        if not math.isclose(window.t_window, self.t_window, rel_tol=1e-12):
            raise WindowContractError(
                f"Window support {window.t_window} does not match the field's T_win {self.t_window}"
            )
        psi = window.evaluate(self.times)
        return self.with_samples(psi[:, None, None] * self.samples, windowed=True)

    def slice_norms(self) -> np.ndarray:
        """L2_x norm of every time slice."""
        return np.sqrt(self.grid.cell_area * np.sum(np.abs(self.samples) ** 2, axis=(1, 2)))

    def l2_norm(self) -> float:
        dt = self.t_window / self.m_steps
        return float(np.sqrt(dt * self.grid.cell_area * np.sum(np.abs(self.samples) ** 2)))

    def apply_B(self, sigma: float) -> "SpaceTimeField":
        """B^sigma = |k|^sigma slice by slice; the k = 0 mode is dropped for sigma > 0."""
        if sigma == 0:
            return self.with_samples(self.samples.copy())
        k_abs = self.grid.k_abs
        symbol = np.zeros_like(k_abs)
        nonzero = k_abs > 0
        symbol[nonzero] = k_abs[nonzero] ** sigma
        return SpaceTimeField.from_spectrum(self.grid, self.t_window,
                                            symbol[None, :, :] * self.spectrum(), self.windowed)

    def padded(self, factor: int = 2) -> "SpaceTimeField":
        """Same trigonometric polynomial sampled on a lattice ``factor`` times finer in x and t."""
        grid = self.grid.with_points(factor * self.grid.n_points)
        return SpaceTimeField.from_spectrum(grid, self.t_window, pad_spectrum(self.spectrum(), factor),
                                            self.windowed)

    def lp_norm(self, p: float) -> float:
        """Space-time L^p norm by collocation quadrature (exact for |u|^2 on a padded field)."""
        dt = self.t_window / self.m_steps
        return float((dt * self.grid.cell_area * np.sum(np.abs(self.samples) ** p)) ** (1.0 / p))

    def xsb_weight(self, s: float, b: float) -> np.ndarray:
        k_squared = self.grid.k_squared[None, :, :]
        lam = self.lam[:, None, None]
        return (1.0 + k_squared) ** s * (1.0 + np.abs(lam + k_squared)) ** (2.0 * b)

    def xsb_norm(self, s: float, b: float) -> float:
        """(sum (1+|k|^2)^s (1+|lambda+|k|^2|)^(2b) |F|^2)^(1/2)."""
        if not self.windowed:
            raise WindowContractError(
                "X_{s,b} norm of an unwindowed field: apply the time window first "
                "(periodization would otherwise create artificial frequencies)"
            )
        return float(np.sqrt(np.sum(self.xsb_weight(s, b) * np.abs(self.spectrum()) ** 2)))
