import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional, Tuple

import numpy as np

from app.services.xsb_service.domain.entities.probe_report import (
    ProbeReport,
    ProbeTrial,
    ResolutionResult,
)
from app.services.xsb_service.domain.value_objects.probe_config import ProbeConfig

# Configure logger
logger = logging.getLogger(__name__)

TrialFn = Callable[[int, np.random.Generator], ProbeTrial]
ResolutionSetup = Callable[[int], Tuple[int, TrialFn]]


class ProbeRunnerUseCase:
    """
    Runs seeded trials for every resolution. Trial i draws from
    SeedSequence(seed).spawn(trials)[i]; results are merged in trial order,
    so reports do not depend on the number of worker threads.
    """

    def __init__(self, threads: Optional[int] = None):
        self._threads = threads

    def execute(self, variant: str, config: ProbeConfig, setup: ResolutionSetup) -> ProbeReport:
        report = ProbeReport(variant=variant, metadata=self._metadata(variant, config))
        for n_points in config.resolutions:
            m_steps, trial_fn = setup(n_points)
            seeds = np.random.SeedSequence(config.seed).spawn(config.trials)

            def run_trial(index: int) -> ProbeTrial:
                return trial_fn(index, np.random.default_rng(seeds[index]))

            with ThreadPoolExecutor(max_workers=self._threads) as pool:
                trials = list(pool.map(run_trial, range(config.trials)))

            kept = [trial for trial in trials if trial.usable]
            discarded = len(trials) - len(kept)
            if discarded:
                logger.warning(f"{variant} N={n_points}: discarded {discarded} trials with vanishing RHS")
            result = ResolutionResult(n_points=n_points, m_steps=m_steps, trials=kept, discarded=discarded)
            report.results.append(result)
            logger.info(f"{variant} N={n_points} M={m_steps}: max ratio {result.max_ratio:.6g} "
                        f"over {len(kept)} trials")
        return report

    @staticmethod
    def _metadata(variant: str, config: ProbeConfig) -> dict:
        return {
            "seed": config.seed,
            "b": config.b_exponent,
            "s1": config.s1,
            "s2": config.s2,
            "variant": variant,
        }
