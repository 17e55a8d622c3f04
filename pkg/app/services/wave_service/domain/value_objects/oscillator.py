import numpy as np

from app.services.spectral_service.domain.value_objects.grid_spec import GridSpec


def rotate_oscillators(grid: GridSpec, position: np.ndarray, velocity: np.ndarray,
                       t: float) -> tuple:
    """Exact flow over time t of x'' = -|k|^2 x, independently for every mode.

    At k = 0 the flow degenerates to free drift x + t*v.
    """
    k_abs = grid.k_abs
    phase = k_abs * t
    cos_term = np.cos(phase)
    sin_term = np.sin(phase)
    sinc_term = np.full_like(k_abs, t)
    nonzero = k_abs > 0
    sinc_term[nonzero] = sin_term[nonzero] / k_abs[nonzero]
    new_position = cos_term * position + sinc_term * velocity
    new_velocity = -k_abs * sin_term * position + cos_term * velocity
    return new_position, new_velocity
