import numpy as np
import scipy.fft as sfft

from app.services.spectral_service.domain.value_objects.grid_spec import GridSpec
from app.services.wave_service.domain.value_objects.cone_weight_spec import ConeWeightSpec
from app.services.xsb_service.domain.entities.probe_report import ProbeTrial
from app.services.xsb_service.domain.value_objects.space_time_lattice import (
    integer_axis,
    lambda_axis,
    pad_spectrum,
)
from app.shared.domain.enums.enums import SignPolicy


def parabola_distance(k_squared, lam, sign_policy: SignPolicy):
    plus = np.abs(lam + k_squared)
    minus = np.abs(lam - k_squared)
    if sign_policy is SignPolicy.PLUS:
        return plus
    if sign_policy is SignPolicy.MINUS:
        return minus
    return np.minimum(plus, minus)


def wrap_free_factors(*arrays: np.ndarray) -> tuple:
    """Per-axis padding factor: 1 where a sum of three support indices cannot wrap, else 2."""
    support = np.zeros(arrays[0].shape, dtype=bool)
    for array in arrays:
        support |= array != 0
    factors = []
    for axis, n in enumerate(support.shape):
        others = tuple(a for a in range(support.ndim) if a != axis)
        occupied = integer_axis(n)[np.any(support, axis=others)]
        reach = int(np.max(np.abs(occupied))) if occupied.size else 0
        factors.append(1 if 3 * reach < n else 2)
    return tuple(factors)


def trilinear_pairing(f: np.ndarray, d: np.ndarray, c: np.ndarray) -> float:
    """sum over (k, lambda) of f(k, lambda) (d * c)(k, lambda), the convolution taken on the full lattice.

    The convolution is formed by a pointwise product in physical space-time,
    padded by 2 along every axis where an index sum could wrap around.
    """
    factors = wrap_free_factors(f, d, c)
    d_padded = pad_spectrum(d, factors)
    c_padded = pad_spectrum(c, factors)
    convolution = d_padded.size * sfft.fftn(sfft.ifftn(d_padded) * sfft.ifftn(c_padded))
    return float(np.sum(pad_spectrum(f, factors) * convolution).real)


class LemmaPairingUseCase:
    """
    <f, D * C> with D = (1+|k|)^-delta d / (1 + dist(lambda, cone))^b and
    C = (1+|k|)^-delta c1 / (1 + dist(lambda, paraboloid))^b, measured
    against ||f|| ||d|| ||c1||.
    """

    def weights(self, grid: GridSpec, t_window: float, m_steps: int, b: float, delta: float,
                sign_policy: SignPolicy = SignPolicy.NEAREST) -> tuple:
        k_abs = grid.k_abs[None, :, :]
        lam = lambda_axis(m_steps, t_window)[:, None, None]
        decay = (1.0 + k_abs) ** (-delta)
        wave = decay / (1.0 + ConeWeightSpec(sign_policy=sign_policy).distance(k_abs, lam)) ** b
        schrodinger = decay / (1.0 + parabola_distance(k_abs ** 2, lam, sign_policy)) ** b
        return wave, schrodinger

    def execute(self, f: np.ndarray, d: np.ndarray, c1: np.ndarray, grid: GridSpec,
                t_window: float, b: float, delta: float,
                sign_policy: SignPolicy = SignPolicy.NEAREST, trial: int = 0) -> ProbeTrial:
        wave, schrodinger = self.weights(grid, t_window, f.shape[0], b, delta, sign_policy)
        lhs = trilinear_pairing(f, wave * d, schrodinger * c1)
        rhs = float(np.linalg.norm(f) * np.linalg.norm(d) * np.linalg.norm(c1))
        return ProbeTrial(trial=trial, lhs=lhs, rhs=rhs)
