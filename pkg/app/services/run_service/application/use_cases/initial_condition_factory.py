import logging

import numpy as np

from app.services.run_service.domain.enums.initial_condition_family import (
    InitialConditionFamily,
    WaveDataFamily,
)
from app.services.run_service.domain.value_objects.run_config import DataSection
from app.services.solver_service.domain.entities.initial_data import InitialData
from app.services.spectral_service.domain.entities.spectral_field import SpectralField2D
from app.services.spectral_service.domain.value_objects.grid_spec import GridSpec

# Configure logger
logger = logging.getLogger(__name__)


class InitialConditionFactory:
    """
    Band-limited stand-ins for Schwartz data (phi, a, b): every field is cut
    to the 2/3 band and b is a derivative, hence mean-free.
    """

    def build(self, grid: GridSpec, section: DataSection) -> InitialData:
        phi_hat = self._schrodinger_data(grid, section).dealias()
        a_hat, b_hat = self._wave_data(grid, section)
        logger.info(f"Initial data {section.family.value}/{section.wave_family.value} on N={grid.n_points}")
        return InitialData(phi_hat, a_hat.dealias(), b_hat.dealias())

    def _centered_square_distance(self, grid: GridSpec, section: DataSection) -> np.ndarray:
        x, y = grid.collocation_points()
        cx = grid.period / 2 if section.center_x is None else section.center_x
        cy = grid.period / 2 if section.center_y is None else section.center_y
        return (x - cx) ** 2 + (y - cy) ** 2

    def _schrodinger_data(self, grid: GridSpec, section: DataSection) -> SpectralField2D:
        family = section.family
        if family is InitialConditionFamily.SINGLE_MODE:
            return SpectralField2D.plane_wave(grid, section.mode_m1, section.mode_m2, section.amplitude)

        if family is InitialConditionFamily.GAUSSIAN_PACKET:
            x, y = grid.collocation_points()
            envelope = np.exp(-self._centered_square_distance(grid, section) / (2.0 * section.width ** 2))
            carrier = np.exp(1j * (section.wavenumber_x * x + section.wavenumber_y * y))
            return SpectralField2D.from_physical(grid, section.amplitude * envelope * carrier,
                                                 real_valued=False)

        # multi_mode_random: complex Gaussian modes with |m| <= n_modes, scaled to ||phi|| = amplitude * L
        rng = np.random.default_rng(section.seed)
        lattice = grid.lattice
        support = np.maximum(np.abs(lattice.m1), np.abs(lattice.m2)) <= section.n_modes
        envelope = (1.0 + grid.k_squared) ** (-0.5 * section.decay)
        noise = rng.standard_normal(grid.shape) + 1j * rng.standard_normal(grid.shape)
        coeffs = np.where(support, envelope * noise, 0.0)
        norm = float(np.linalg.norm(coeffs))
        if norm > 0:
            coeffs = coeffs * (section.amplitude * grid.period / norm)
        return SpectralField2D(grid, coeffs)

    def _wave_data(self, grid: GridSpec, section: DataSection) -> tuple:
        if section.wave_family is WaveDataFamily.ZERO:
            return SpectralField2D.zeros(grid), SpectralField2D.zeros(grid)

        bump = np.exp(-self._centered_square_distance(grid, section) / (2.0 * section.wave_width ** 2))
        bump_hat = SpectralField2D.from_physical(grid, section.wave_amplitude * bump, real_valued=True)
        a_hat = bump_hat
        # b = d/dx of the bump: i kx multiplies, k = 0 drops out
        b_coeffs = 1j * grid.lattice.kx * bump_hat.coeffs
        b_coeffs[0, 0] = 0.0
        b_hat = bump_hat.with_coeffs(b_coeffs)
        return a_hat, b_hat
