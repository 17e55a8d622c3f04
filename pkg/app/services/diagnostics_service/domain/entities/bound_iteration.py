from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class BoundIteration:
    """
    Orbit of x_{n+1} = x_n + c x_n^(1-delta) with its fitted power of n,
    next to the multiplicative orbit x_{n+1} = (1+c) x_n kept as log x_n.
    """
    c: float
    delta: float
    x0: float
    values: np.ndarray
    exponent: float
    multiplicative_log_values: np.ndarray
    multiplicative_rate: float
    multiplicative_residual: float

    @property
    def steps(self) -> int:
        return len(self.values) - 1

    @property
    def predicted_exponent(self) -> float:
        return 1.0 / self.delta
