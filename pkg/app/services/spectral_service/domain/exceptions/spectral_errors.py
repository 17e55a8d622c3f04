from app.shared.domain.exceptions.common_errors import BaseZakharovError, ConfigurationError


class ShapeMismatchError(ConfigurationError):
    error_code: str = "SHAPE_MISMATCH"


class SingularModeError(BaseZakharovError):
    """Raised when a negative power of B meets a nonzero mean."""
    error_code: str = "SINGULAR_MODE"
