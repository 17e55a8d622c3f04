import logging

import numpy as np

from app.services.diagnostics_service.domain.entities.diagnostics_record import IncrementTerms
from app.services.diagnostics_service.domain.exceptions.diagnostics_errors import UnsupportedOrderError
from app.services.solver_service.domain.entities.initial_data import InitialData
from app.services.solver_service.domain.entities.zakharov_state import ZakharovState
from app.services.spectral_service.domain.entities.spectral_field import SpectralField2D

# Configure logger
logger = logging.getLogger(__name__)


def require_even_order(s) -> int:
    value = float(s)
    if not value.is_integer() or value < 2 or int(value) % 2:
        raise UnsupportedOrderError(
            f"Increment decomposition needs an even integer s >= 2, got {s}",
            errors={"s": s}
        )
    return int(value)


def potential_times(state: ZakharovState, potential: SpectralField2D) -> SpectralField2D:
    """Fourier coefficients of the pointwise product potential * u."""
    grid = state.grid
    u = grid.inverse(state.u_hat.coeffs)
    return SpectralField2D.from_physical(grid, potential.to_physical() * u, real_valued=False)


def cancellation_probe(state: ZakharovState, s) -> float:
    """2 Im <n B^s u, B^s u>, zero for every real n."""
    s = require_even_order(s)
    grid = state.grid
    v = grid.inverse(state.u_hat.apply_B(s).coeffs)
    n = state.wave.n_hat.to_physical()
    return float(2.0 * grid.cell_area * np.vdot(v, n * v).imag)


class IncrementDecompositionUseCase:
    """
    I_total = 2 Re <B^s u_t, B^s u> with u_t = i Laplacian u - i n u, split into
    I1 = -2 Im <B^s Laplacian u, B^s u>,
    I2 = 2 Im <B^s (n_free u), B^s u> and
    I3 = 2 Im <B^s (n_cubic u), B^s u>,
    where n_free = W(a, b)(t) is propagated exactly from the data and
    n_cubic = n - n_free.
    """

    def execute(self, state: ZakharovState, data: InitialData, s) -> IncrementTerms:
        s = require_even_order(s)
        u_hat = state.u_hat
        weight = state.grid.k_abs ** (2 * s)

        n_free = data.free_wave_at(state.t).n_hat
        n_cubic = state.wave.n_hat - n_free
        product = potential_times(state, state.wave.n_hat)
        product_free = potential_times(state, n_free)
        product_cubic = potential_times(state, n_cubic)

        u_t = -1j * state.grid.k_squared * u_hat.coeffs - 1j * product.coeffs
        i_total = 2.0 * float(np.sum(weight * u_t * np.conj(u_hat.coeffs)).real)
        i1 = -2.0 * self._pairing(weight, u_hat.laplacian().coeffs, u_hat.coeffs).imag
        i2 = 2.0 * self._pairing(weight, product_free.coeffs, u_hat.coeffs).imag
        i3 = 2.0 * self._pairing(weight, product_cubic.coeffs, u_hat.coeffs).imag

        logger.debug(f"Increment at t={state.t}: I_total={i_total:.6e}, I1={i1:.3e}")
        return IncrementTerms(i_total=i_total, i1=float(i1), i2=float(i2), i3=float(i3))

    @staticmethod
    def _pairing(weight: np.ndarray, f: np.ndarray, g: np.ndarray) -> complex:
        """<B^s f, B^s g> = sum |k|^{2s} f conj(g)."""
        return complex(np.sum(weight * f * np.conj(g)))
