import math
from dataclasses import dataclass

import numpy as np

from app.shared.domain.exceptions.common_errors import ValidationError


@dataclass(frozen=True)
class TimeWindow:
    """Smooth cutoff psi_T: raised-cosine roll-on, plateau of length T, raised-cosine roll-off.

    Supported in [0, T_win] with T_win = T (1 + 2 flank_fraction).
    """
    t_total: float = 1.0
    flank_fraction: float = 0.1

    def __post_init__(self):
        if not (math.isfinite(self.t_total) and self.t_total > 0):
            raise ValidationError(f"t_total must be positive, got {self.t_total}")
        if not 0.0 <= self.flank_fraction <= 0.5:
            raise ValidationError(f"flank_fraction must lie in [0, 0.5], got {self.flank_fraction}")

    @property
    def flank(self) -> float:
        return self.flank_fraction * self.t_total

    @property
    def t_window(self) -> float:
        return self.t_total + 2.0 * self.flank

    @property
    def plateau(self) -> tuple:
        return (self.flank, self.flank + self.t_total)

    def sample_times(self, m_steps: int) -> np.ndarray:
        return self.t_window * np.arange(m_steps) / m_steps

    def evaluate(self, times) -> np.ndarray:
        t = np.asarray(times, dtype=float)
        start, end = self.plateau
        values = np.where((t >= start) & (t <= end), 1.0, 0.0)
        if self.flank > 0:
            rising = (t >= 0) & (t < start)
            falling = (t > end) & (t <= self.t_window)
            values = np.where(rising, 0.5 * (1.0 - np.cos(math.pi * t / self.flank)), values)
            values = np.where(falling, 0.5 * (1.0 + np.cos(math.pi * (t - end) / self.flank)), values)
        return values
