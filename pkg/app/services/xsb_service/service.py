import logging
from typing import Optional

import numpy as np

from app.services.spectral_service.domain.entities.spectral_field import SpectralField2D
from app.services.spectral_service.domain.value_objects.grid_spec import GridSpec
from app.services.wave_service.domain.value_objects.cone_weight_spec import ConeWeightSpec
from app.services.xsb_service.application.use_cases.bilinear_estimate import BilinearEstimateUseCase
from app.services.xsb_service.application.use_cases.field_sampler import FieldSampler, free_solution
from app.services.xsb_service.application.use_cases.lemma_pairing import LemmaPairingUseCase
from app.services.xsb_service.application.use_cases.probe_runner import ProbeRunnerUseCase
from app.services.xsb_service.application.use_cases.strichartz_estimate import StrichartzEstimateUseCase
from app.services.xsb_service.domain.entities.probe_report import ProbeReport, ProbeTrial
from app.services.xsb_service.domain.entities.space_time_field import SpaceTimeField
from app.services.xsb_service.domain.enums.probe_variant import ProbeVariant
from app.services.xsb_service.domain.value_objects.probe_config import ProbeConfig
from app.services.xsb_service.domain.value_objects.time_window import TimeWindow

# Configure logger
logger = logging.getLogger(__name__)


class XsbService:
    """
    Space-time analysis: windowing, X_{s,b} norms, free solutions and the
    Strichartz, bilinear and trilinear ratio probes.
    """

    def __init__(self, threads: Optional[int] = None):
        self._threads = threads
        self._bilinear_use_case = BilinearEstimateUseCase()
        self._strichartz_use_case = StrichartzEstimateUseCase()
        self._lemma_use_case = LemmaPairingUseCase()
        logger.debug("Xsb service initialized")

    def apply_window(self, field: SpaceTimeField, window: TimeWindow) -> SpaceTimeField:
        return field.apply_window(window)

    def xsb_norm(self, field: SpaceTimeField, s: float, b: float) -> float:
        return field.xsb_norm(s, b)

    def free_solution(self, phi_hat: SpectralField2D, window: TimeWindow, m_steps: int) -> SpaceTimeField:
        return free_solution(phi_hat, window, m_steps)

    def bilinear_probe(self, u1: SpaceTimeField, u2: SpaceTimeField, s1: float, s2: float,
                       variant: ProbeVariant, config: ProbeConfig) -> ProbeTrial:
        spec = ConeWeightSpec(sign_policy=config.sign_policy, include_trace_term=config.include_trace_term)
        return self._bilinear_use_case.execute(u1, u2, s1, s2, variant, config.b_exponent, spec,
                                               config.swap_conjugate)

    def strichartz_probe(self, config: ProbeConfig) -> ProbeReport:
        sampler = FieldSampler(config)
        window = self._window(config)

        def setup(n_points: int):
            grid = GridSpec(n_points=n_points, period=config.period)
            m_steps = sampler.choose_m_steps(grid, window)

            def trial(index: int, rng: np.random.Generator) -> ProbeTrial:
                u = sampler.sample(grid, window, m_steps, rng)
                return self._strichartz_use_case.execute(u, config.b_exponent, config.s, index)
            return m_steps, trial

        return self._run(ProbeVariant.STRICHARTZ, config, setup)

    def bilinear_report(self, variant: ProbeVariant, config: ProbeConfig) -> ProbeReport:
        """Randomized bilinear_probe over seeded pairs (u1, u2) at every resolution."""
        variant = ProbeVariant(variant)
        sampler = FieldSampler(config)
        window = self._window(config)

        def setup(n_points: int):
            grid = GridSpec(n_points=n_points, period=config.period)
            m_steps = sampler.choose_m_steps(grid, window)

            def trial(index: int, rng: np.random.Generator) -> ProbeTrial:
                u1 = sampler.sample(grid, window, m_steps, rng)
                u2 = sampler.sample(grid, window, m_steps, rng)
                result = self.bilinear_probe(u1, u2, config.s1, config.s2, variant, config)
                return ProbeTrial(index, result.lhs, result.rhs)
            return m_steps, trial

        return self._run(variant, config, setup)

    def lemma_probe(self, config: ProbeConfig) -> ProbeReport:
        sampler = FieldSampler(config)
        window = self._window(config)

        def setup(n_points: int):
            grid = GridSpec(n_points=n_points, period=config.lemma_period)
            m_steps = sampler.choose_lemma_m_steps(grid, window)

            def trial(index: int, rng: np.random.Generator) -> ProbeTrial:
                f, d, c1 = sampler.lemma_arrays(grid, window.t_window, m_steps, rng)
                return self._lemma_use_case.execute(f, d, c1, grid, window.t_window, config.b_exponent,
                                                    config.delta, config.sign_policy, index)
            return m_steps, trial

        return self._run(ProbeVariant.LEMMA, config, setup)

    def _run(self, variant: ProbeVariant, config: ProbeConfig, setup) -> ProbeReport:
        logger.info(f"Running {variant.value} probe: {config.trials} trials at N={config.resolutions}")
        try:
            return ProbeRunnerUseCase(self._threads).execute(variant.value, config, setup)
        except Exception as e:
            logger.error(f"{variant.value} probe failed: {str(e)}", exc_info=True)
            raise

    @staticmethod
    def _window(config: ProbeConfig) -> TimeWindow:
        return TimeWindow(t_total=config.window_length, flank_fraction=config.flank_fraction)
