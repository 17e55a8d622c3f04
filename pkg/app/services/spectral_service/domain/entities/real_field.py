from dataclasses import dataclass

import numpy as np

from app.services.spectral_service.domain.exceptions.spectral_errors import ShapeMismatchError
from app.services.spectral_service.domain.value_objects.grid_spec import GridSpec
from app.shared.domain.exceptions.common_errors import ValidationError


@dataclass(frozen=True)
class RealField2D:
    """Real samples at the collocation points x_j = (L/N) j."""
    grid: GridSpec
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values)
        if values.shape != self.grid.shape:
            raise ShapeMismatchError(
                f"Field shape {values.shape} does not match grid {self.grid.shape}"
            )
        if np.iscomplexobj(values):
            raise ValidationError("RealField2D values must be real")
        if not np.all(np.isfinite(values)):
            raise ValidationError("RealField2D values must be finite")
        object.__setattr__(self, "values", values.astype(float, copy=False))

    def inner(self, other: "RealField2D") -> float:
        return float(self.grid.cell_area * np.sum(self.values * other.values))

    def l2_norm(self) -> float:
        return float(np.sqrt(self.grid.cell_area * np.sum(self.values ** 2)))
