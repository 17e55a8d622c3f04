import math

import numpy as np

from app.services.spectral_service.domain.entities.spectral_field import SpectralField2D
from app.services.spectral_service.domain.value_objects.grid_spec import GridSpec
from app.services.wave_service.domain.value_objects.cone_weight_spec import ConeWeightSpec
from app.services.xsb_service.application.use_cases.lemma_pairing import parabola_distance
from app.services.xsb_service.domain.entities.space_time_field import SpaceTimeField
from app.services.xsb_service.domain.enums.probe_variant import SamplerKind
from app.services.xsb_service.domain.value_objects.probe_config import ProbeConfig
from app.services.xsb_service.domain.value_objects.space_time_lattice import integer_axis, lambda_axis
from app.services.xsb_service.domain.value_objects.time_window import TimeWindow


def free_evolution(phi_hat: SpectralField2D, t_window: float, m_steps: int,
                   extra_frequency=None) -> SpaceTimeField:
    """Unwindowed samples of exp(-i(|k|^2 + omega_k) t) phi_hat at t_j = j T_win / M."""
    grid = phi_hat.grid
    frequency = grid.k_squared if extra_frequency is None else grid.k_squared + extra_frequency
    times = t_window * np.arange(m_steps) / m_steps
    phases = np.exp(-1j * frequency[None, :, :] * times[:, None, None])
    samples = grid.inverse(phi_hat.coeffs[None, :, :] * phases)
    return SpaceTimeField(grid, t_window, samples, windowed=False)


def free_solution(phi_hat: SpectralField2D, window: TimeWindow, m_steps: int) -> SpaceTimeField:
    return free_evolution(phi_hat, window.t_window, m_steps).apply_window(window)


def covering_m_steps(reach: float, t_window: float) -> int:
    """Smallest power of two >= 8 whose Nyquist frequency pi M / T_win covers 1.25 reach."""
    required = 1.25 * reach * t_window / math.pi
    return max(8, 1 << max(0, math.ceil(math.log2(max(required, 1.0)))))


class FieldSampler:
    """
    Seeded random inputs for the probes: complex Gaussian coefficients under
    the envelope (1+|k|^2)^(-r/2), restricted to max(|m1|, |m2|) <= N/3.
    """

    def __init__(self, config: ProbeConfig):
        self._config = config

    def band_mask(self, grid: GridSpec) -> np.ndarray:
        return grid.lattice.dealias_mask

    def max_k_squared(self, grid: GridSpec) -> float:
        return float(np.max(grid.k_squared[self.band_mask(grid)]))

    def choose_m_steps(self, grid: GridSpec, window: TimeWindow) -> int:
        """Smallest power of two whose Nyquist frequency pi M / T_win covers 1.25 max|k|^2."""
        if self._config.m_steps is not None:
            return self._config.m_steps
        reach = self.max_k_squared(grid)
        if self._config.sampler is SamplerKind.MODULATED:
            reach += self._config.modulation
        return covering_m_steps(reach, window.t_window)

    def random_data(self, grid: GridSpec, rng: np.random.Generator) -> SpectralField2D:
        envelope = (1.0 + grid.k_squared) ** (-0.5 * self._config.decay)
        noise = (rng.standard_normal(grid.shape) + 1j * rng.standard_normal(grid.shape)) / math.sqrt(2.0)
        return SpectralField2D(grid, np.where(self.band_mask(grid), envelope * noise, 0.0))

    def sample(self, grid: GridSpec, window: TimeWindow, m_steps: int,
               rng: np.random.Generator) -> SpaceTimeField:
        phi_hat = self.random_data(grid, rng)
        extra = None
        if self._config.sampler is SamplerKind.MODULATED:
            bound = self._config.modulation
            extra = rng.uniform(-bound, bound, grid.shape)
        return free_evolution(phi_hat, window.t_window, m_steps, extra).apply_window(window)

    def lemma_spatial_support(self, grid: GridSpec) -> np.ndarray:
        return self.band_mask(grid) & (grid.k_abs >= self._config.lemma_k_min)

    def choose_lemma_m_steps(self, grid: GridSpec, window: TimeWindow) -> int:
        """Same covering rule as ``choose_m_steps``, over the lemma support."""
        if self._config.lemma_m_steps is not None:
            return self._config.lemma_m_steps
        spatial = self.lemma_spatial_support(grid)
        reach = float(np.max(grid.k_squared[spatial])) if spatial.any() else 0.0
        return covering_m_steps(reach, window.t_window)

    def lemma_support(self, grid: GridSpec, m_steps: int) -> np.ndarray:
        """|k| >= k_min inside the band, all lambda except the Nyquist row."""
        temporal = np.abs(integer_axis(m_steps)) < m_steps // 2
        return temporal[:, None, None] & self.lemma_spatial_support(grid)[None, :, :]

    def lemma_arrays(self, grid: GridSpec, t_window: float, m_steps: int,
                     rng: np.random.Generator) -> tuple:
        """Nonnegative, L2-normalized (f, d, c1) on the lemma support.

        All three decay like exp(-(|k| - k_min) / k_width) off the inner shell.
        d hugs the light cone and c1 the paraboloid with e-folding distance
        ``lemma_surface_width``; f decays like exp(-|lambda| / (1 + k_min^2)).
        The profiles do not depend on N or M, so a larger lattice only adds
        points where the arrays are negligible.
        """
        config = self._config
        support = self.lemma_support(grid, m_steps)
        k_abs = grid.k_abs[None, :, :]
        lam = lambda_axis(m_steps, t_window)[:, None, None]
        shell = np.exp(-np.maximum(k_abs - config.lemma_k_min, 0.0) / config.lemma_k_width)
        width = config.lemma_surface_width
        cone = ConeWeightSpec(sign_policy=config.sign_policy).distance(k_abs, lam)
        paraboloid = parabola_distance(k_abs ** 2, lam, config.sign_policy)
        profiles = (
            shell * np.exp(-np.abs(lam) / (1.0 + config.lemma_k_min ** 2)),
            shell * np.exp(-cone / width),
            shell * np.exp(-paraboloid / width),
        )
        arrays = []
        for profile in profiles:
            values = np.where(support, profile * np.abs(rng.standard_normal(support.shape)), 0.0)
            norm = float(np.linalg.norm(values))
            arrays.append(values / norm if norm > 0 else values)
        return tuple(arrays)
