from app.shared.domain.exceptions.common_errors import BaseZakharovError


class UnsupportedOrderError(BaseZakharovError):
    """Raised when the increment decomposition is asked for an odd or fractional order."""
    error_code: str = "UNSUPPORTED_ORDER"


class InsufficientDataError(BaseZakharovError):
    error_code: str = "INSUFFICIENT_DATA"
