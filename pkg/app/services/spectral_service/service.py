import logging
from typing import Union

import numpy as np

from app.services.spectral_service.domain.entities.real_field import RealField2D
from app.services.spectral_service.domain.entities.spectral_field import SpectralField2D
from app.services.spectral_service.domain.enums.transform_direction import TransformDirection
from app.services.spectral_service.domain.exceptions.spectral_errors import ShapeMismatchError
from app.services.spectral_service.domain.value_objects.grid_spec import GridSpec

# Configure logger
logger = logging.getLogger(__name__)


class SpectralService:
    """
    Periodic-torus spectral representation: transforms, B = sqrt(-Laplacian),
    Sobolev norms and 2/3-rule dealiasing.
    """

    def __init__(self):
        logger.debug("Spectral service initialized")

    def transform(self, grid: GridSpec, field: Union[RealField2D, np.ndarray, SpectralField2D],
                  direction: TransformDirection = TransformDirection.FORWARD):
        """
        Forward: physical samples (RealField2D or complex array) -> SpectralField2D.
        Inverse: SpectralField2D -> RealField2D for real-flagged fields,
        complex samples otherwise.
        """
        direction = TransformDirection(direction)
        if direction is TransformDirection.FORWARD:
            if isinstance(field, SpectralField2D):
                raise ShapeMismatchError("Forward transform expects physical samples")
            return SpectralField2D.from_physical(grid, field)

        if not isinstance(field, SpectralField2D):
            raise ShapeMismatchError("Inverse transform expects a SpectralField2D")
        if field.grid != grid:
            raise ShapeMismatchError(
                f"Field lives on {field.grid.shape}, requested {grid.shape}"
            )
        if field.real_valued:
            return field.to_real_field()
        return field.to_physical()

    def apply_B(self, field: SpectralField2D, sigma: float) -> SpectralField2D:
        return field.apply_B(sigma)

    def sobolev_norm(self, field: SpectralField2D, s: float) -> float:
        return field.sobolev_norm(s)

    def dealias(self, field: SpectralField2D) -> SpectralField2D:
        return field.dealias()
