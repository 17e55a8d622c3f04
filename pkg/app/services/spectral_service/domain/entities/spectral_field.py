from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from app.services.spectral_service.domain.entities.real_field import RealField2D
from app.services.spectral_service.domain.exceptions.spectral_errors import (
    ShapeMismatchError,
    SingularModeError,
)
from app.services.spectral_service.domain.value_objects.grid_spec import GridSpec

# relative size below which the k=0 coefficient counts as zero
MEAN_FREE_TOLERANCE = 1e-10


def hermitian_reflection(coeffs: np.ndarray) -> np.ndarray:
    """Return c(-k) laid out on the lattice of c(k)."""
    return np.roll(np.flip(coeffs, axis=(0, 1)), 1, axis=(0, 1))


@dataclass(frozen=True)
class SpectralField2D:
    """Fourier coefficients of a function on the periodic square torus.

    ``real_valued`` marks fields whose physical samples are real; such
    fields satisfy coeffs(-k) = conj(coeffs(k)).
    """
    grid: GridSpec
    coeffs: np.ndarray
    real_valued: bool = False

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=complex)
        if coeffs.shape != self.grid.shape:
            raise ShapeMismatchError(
                f"Coefficient shape {coeffs.shape} does not match grid {self.grid.shape}",
                errors={"expected": self.grid.shape, "actual": coeffs.shape}
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_physical(cls, grid: GridSpec, values: Union[np.ndarray, RealField2D],
                      real_valued: Optional[bool] = None) -> "SpectralField2D":
        if isinstance(values, RealField2D):
            if values.grid != grid:
                raise ShapeMismatchError("RealField2D lives on a different grid")
            values = values.values
            real_valued = True
        values = np.asarray(values)
        if values.shape != grid.shape:
            raise ShapeMismatchError(
                f"Sample shape {values.shape} does not match grid {grid.shape}"
            )
        if real_valued is None:
            real_valued = not np.iscomplexobj(values)
        return cls(grid, grid.forward(values), real_valued)

    @classmethod
    def zeros(cls, grid: GridSpec, real_valued: bool = True) -> "SpectralField2D":
        return cls(grid, np.zeros(grid.shape, dtype=complex), real_valued)

    @classmethod
    def plane_wave(cls, grid: GridSpec, m1: int, m2: int, amplitude: complex = 1.0) -> "SpectralField2D":
        """amplitude * exp(i k.x) for the lattice mode (m1, m2)."""
        coeffs = np.zeros(grid.shape, dtype=complex)
        coeffs[grid.mode_index(m1, m2)] = amplitude * grid.period
        return cls(grid, coeffs, real_valued=False)

    def to_physical(self) -> np.ndarray:
        values = self.grid.inverse(self.coeffs)
        return values.real if self.real_valued else values

    def to_real_field(self) -> RealField2D:
        return RealField2D(self.grid, self.grid.inverse(self.coeffs).real)

    def with_coeffs(self, coeffs: np.ndarray, real_valued: Optional[bool] = None) -> "SpectralField2D":
        flag = self.real_valued if real_valued is None else real_valued
        return SpectralField2D(self.grid, coeffs, flag)

    @property
    def zero_mode(self) -> complex:
        return complex(self.coeffs[0, 0])

    def l2_norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.coeffs) ** 2)))

    def inner(self, other: "SpectralField2D") -> complex:
        """<f, g> = sum_k fhat(k) conj(ghat(k)), equal to the physical L2 pairing."""
        return complex(np.vdot(other.coeffs, self.coeffs))

    def is_mean_free(self, tolerance: float = MEAN_FREE_TOLERANCE) -> bool:
        return abs(self.zero_mode) <= tolerance * max(self.l2_norm(), np.finfo(float).tiny)

    def hermitian_defect(self) -> float:
        scale = max(float(np.max(np.abs(self.coeffs))), np.finfo(float).tiny)
        return float(np.max(np.abs(self.coeffs - np.conj(hermitian_reflection(self.coeffs)))) / scale)

    def is_hermitian(self, tolerance: float = 1e-12) -> bool:
        return self.hermitian_defect() <= tolerance

    def multiply(self, symbol: np.ndarray) -> "SpectralField2D":
        """Fourier multiplier with a real, even symbol (keeps the reality flag)."""
        return self.with_coeffs(symbol * self.coeffs)

    def apply_B(self, sigma: float) -> "SpectralField2D":
        """B^sigma with B = sqrt(-Laplacian), symbol |k|^sigma."""
        if sigma == 0:
            return self.with_coeffs(self.coeffs.copy())
        k_abs = self.grid.k_abs
        nonzero = k_abs > 0
        if sigma < 0 and not self.is_mean_free():
            raise SingularModeError(
                f"B^{sigma} is undefined on a field with nonzero mean ({self.zero_mode:.3e})"
            )
        symbol = np.zeros_like(k_abs)
        symbol[nonzero] = k_abs[nonzero] ** sigma
        return self.multiply(symbol)

    def laplacian(self) -> "SpectralField2D":
        return self.multiply(-self.grid.k_squared)

    def sobolev_norm(self, s: float) -> float:
        weight = (1.0 + self.grid.k_squared) ** s
        return float(np.sqrt(np.sum(weight * np.abs(self.coeffs) ** 2)))

    def dealias(self) -> "SpectralField2D":
        return self.with_coeffs(np.where(self.grid.lattice.dealias_mask, self.coeffs, 0.0))

    def __add__(self, other: "SpectralField2D") -> "SpectralField2D":
        return SpectralField2D(self.grid, self.coeffs + other.coeffs,
                               self.real_valued and other.real_valued)

    def __sub__(self, other: "SpectralField2D") -> "SpectralField2D":
        return SpectralField2D(self.grid, self.coeffs - other.coeffs,
                               self.real_valued and other.real_valued)

    def scaled(self, factor: complex) -> "SpectralField2D":
        keeps_reality = self.real_valued and np.isreal(factor)
        return SpectralField2D(self.grid, factor * self.coeffs, bool(keeps_reality))
