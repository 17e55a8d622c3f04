import logging
import math

import numpy as np

from app.services.diagnostics_service.application.use_cases.fit_growth import fit_power_law
from app.services.diagnostics_service.domain.entities.bound_iteration import BoundIteration
from app.services.wave_service.domain.exceptions.wave_errors import InvalidArgumentError

# Configure logger
logger = logging.getLogger(__name__)

RESCALE_THRESHOLD = 1e100
LOG_RESCALE_THRESHOLD = math.log(RESCALE_THRESHOLD)


class IterateLocalBoundUseCase:
    """
    Iterates the local-to-global recurrence x_{n+1} = x_n + c x_n^(1-delta),
    whose orbit grows like (delta c n)^(1/delta), and the multiplicative
    recurrence x_{n+1} = (1+c) x_n that only gives an exponential bound.
    """

    def execute(self, c: float, delta: float, x0: float, steps: int) -> BoundIteration:
        self._validate(c, delta, x0, steps)

        values = np.empty(steps + 1)
        x = float(x0)
        power = 1.0 - delta
        values[0] = x
        for n in range(1, steps + 1):
            x = x + c * x ** power
            values[n] = x

        n_axis = np.arange(steps + 1, dtype=float)
        fit = fit_power_law(n_axis, values, t_min=max(1.0, steps / 10.0))

        log_values = self._multiplicative_orbit(c, x0, steps)
        scaled = n_axis / steps
        slope, intercept = np.polyfit(scaled, log_values, 1)
        residual = float(np.sqrt(np.mean((log_values - (slope * scaled + intercept)) ** 2)))

        logger.info(f"Bound iteration delta={delta}, c={c}: fitted exponent {fit.exponent_alpha:.4f} "
                    f"(1/delta = {1.0 / delta:.4f})")
        return BoundIteration(
            c=c, delta=delta, x0=x0, values=values, exponent=fit.exponent_alpha,
            multiplicative_log_values=log_values,
            multiplicative_rate=float(slope / steps),
            multiplicative_residual=residual,
        )

    @staticmethod
    def _multiplicative_orbit(c: float, x0: float, steps: int) -> np.ndarray:
        """log x_n for x_{n+1} = (1+c) x_n, iterated on a mantissa rescaled before it overflows."""
        log_values = np.empty(steps + 1)
        mantissa, offset = float(x0), 0.0
        log_values[0] = math.log(mantissa)
        for n in range(1, steps + 1):
            mantissa = mantissa + c * mantissa
            if mantissa > RESCALE_THRESHOLD:
                mantissa /= RESCALE_THRESHOLD
                offset += LOG_RESCALE_THRESHOLD
            log_values[n] = math.log(mantissa) + offset
        return log_values

    @staticmethod
    def _validate(c: float, delta: float, x0: float, steps: int) -> None:
        if not (math.isfinite(c) and c > 0):
            raise InvalidArgumentError(f"c must be positive, got {c}")
        if not 0.0 < delta <= 1.0:
            raise InvalidArgumentError(f"delta must lie in (0, 1], got {delta}")
        if not (math.isfinite(x0) and x0 > 0):
            raise InvalidArgumentError(f"x0 must be positive, got {x0}")
        if steps < 40:
            raise InvalidArgumentError(f"steps must be at least 40, got {steps}")
