import logging
import math
from typing import Sequence

import numpy as np

from app.services.diagnostics_service.domain.entities.diagnostics_record import DiagnosticsRecord
from app.services.diagnostics_service.domain.entities.growth_fit import GrowthFit
from app.services.diagnostics_service.domain.exceptions.diagnostics_errors import InsufficientDataError
from app.shared.domain.exceptions.common_errors import ValidationError

# Configure logger
logger = logging.getLogger(__name__)

MIN_FIT_POINTS = 4


def fit_power_law(times, values, s: float = float("nan"), t_min: float = 0.0) -> GrowthFit:
    """Fit log x = alpha log t + log C over samples with t >= t_min and t > 0."""
    times = np.asarray(times, dtype=float)
    values = np.asarray(values, dtype=float)
    mask = (times >= t_min) & (times > 0)
    if np.count_nonzero(mask) < MIN_FIT_POINTS:
        raise InsufficientDataError(
            f"{np.count_nonzero(mask)} samples with t >= {t_min}; at least {MIN_FIT_POINTS} needed",
            errors={"available": int(np.count_nonzero(mask)), "t_min": t_min}
        )
    selected = values[mask]
    if np.any(selected <= 0) or not np.all(np.isfinite(selected)):
        raise ValidationError("Growth fit needs positive finite values")

    log_t = np.log(times[mask])
    log_x = np.log(selected)
    slope, intercept = np.polyfit(log_t, log_x, 1)
    residual = float(np.sqrt(np.mean((log_x - (slope * log_t + intercept)) ** 2)))
    return GrowthFit(s=s, t_min=t_min, exponent_alpha=float(slope),
                     prefactor_c=float(math.exp(intercept)), residual=residual,
                     n_records=int(np.count_nonzero(mask)))


class FitGrowthUseCase:

    def execute(self, records: Sequence[DiagnosticsRecord], s: float, t_min: float) -> GrowthFit:
        s = float(s)
        missing = [r.t for r in records if s not in r.hs_norms]
        if missing:
            raise ValidationError(f"Records carry no H^{s} norm (first at t={missing[0]})")
        fit = fit_power_law([r.t for r in records], [r.hs_norms[s] for r in records], s, t_min)
        logger.info(f"Growth fit s={s}: alpha={fit.exponent_alpha:.4f}, C={fit.prefactor_c:.4g} "
                    f"over {fit.n_records} records")
        return fit
