import numpy as np

from app.services.spectral_service.domain.entities.spectral_field import (
    MEAN_FREE_TOLERANCE,
    SpectralField2D,
)
from app.services.wave_service.domain.exceptions.wave_errors import MeanFreeViolationError


def require_mean_free(b_hat: SpectralField2D, tolerance: float = MEAN_FREE_TOLERANCE) -> None:
    if not b_hat.is_mean_free(tolerance):
        raise MeanFreeViolationError(
            f"Field has nonzero mean {abs(b_hat.zero_mode):.3e}; "
            "it is not the divergence of any periodic field V (H-hat^-1 requires mean-free data)",
            errors={"zero_mode": abs(b_hat.zero_mode)}
        )


def inverse_k_squared(k_squared: np.ndarray) -> np.ndarray:
    out = np.zeros_like(k_squared)
    nonzero = k_squared > 0
    out[nonzero] = 1.0 / k_squared[nonzero]
    return out


def hhat_minus1_norm(b_hat: SpectralField2D) -> float:
    """(sum_{k != 0} |b(k)|^2 / |k|^2)^(1/2), the L2 norm of the curl-free V with div V = b."""
    require_mean_free(b_hat)
    weight = inverse_k_squared(b_hat.grid.k_squared)
    return float(np.sqrt(np.sum(weight * np.abs(b_hat.coeffs) ** 2)))


def curl_free_potential(b_hat: SpectralField2D) -> tuple:
    """V_hat = -i k b_hat / |k|^2, so that div V = b and curl V = 0."""
    require_mean_free(b_hat)
    lattice = b_hat.grid.lattice
    weight = inverse_k_squared(lattice.k_squared)
    v1 = b_hat.with_coeffs(-1j * lattice.kx * weight * b_hat.coeffs)
    v2 = b_hat.with_coeffs(-1j * lattice.ky * weight * b_hat.coeffs)
    return v1, v2
