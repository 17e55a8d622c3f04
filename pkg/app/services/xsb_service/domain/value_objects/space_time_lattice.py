import math

import numpy as np
import scipy.fft as sfft


def is_power_of_two(value: int) -> bool:
    return value >= 1 and not value & (value - 1)


def lambda_axis(m_steps: int, t_window: float) -> np.ndarray:
    """Dual frequencies 2 pi j / T_win in FFT order."""
    return 2.0 * math.pi * sfft.fftfreq(m_steps, d=t_window / m_steps)


def integer_axis(n: int) -> np.ndarray:
    return np.rint(sfft.fftfreq(n, d=1.0 / n)).astype(int)


def pad_spectrum(coeffs: np.ndarray, factor=2) -> np.ndarray:
    """Embed FFT-ordered coefficients into a lattice ``factor`` times larger per axis.

    ``factor`` is one integer for every axis or a tuple with one entry per axis.
    """
    factors = (factor,) * coeffs.ndim if isinstance(factor, int) else tuple(factor)
    shape = tuple(f * n for f, n in zip(factors, coeffs.shape))
    out = np.zeros(shape, dtype=complex)
    index = np.ix_(*[integer_axis(n) % (f * n) for f, n in zip(factors, coeffs.shape)])
    out[index] = coeffs
    return out


def interpolate_along_lambda(abs_spectrum: np.ndarray, t_window: float, targets: np.ndarray) -> np.ndarray:
    """Linear interpolation of |F(k, .)| at lambda = targets(lambda_row, k); zero outside the lattice.

    Agrees with numpy.interp(target, lambda_sorted, column, left=0, right=0) column by column.
    """
    m = abs_spectrum.shape[0]
    spacing = 2.0 * math.pi / t_window
    position = targets / spacing
    low, high = -(m // 2), m // 2 - 1
    # lattice endpoints count as inside up to rounding of target / spacing
    inside = (position >= low - 1e-9) & (position <= high + 1e-9)
    position = np.clip(position, low, high)
    j0 = np.minimum(np.floor(position).astype(int), high - 1)
    frac = position - j0
    v0 = np.take_along_axis(abs_spectrum, np.broadcast_to(j0 % m, targets.shape), axis=0)
    v1 = np.take_along_axis(abs_spectrum, np.broadcast_to((j0 + 1) % m, targets.shape), axis=0)
    return np.where(inside, (1.0 - frac) * v0 + frac * v1, 0.0)
