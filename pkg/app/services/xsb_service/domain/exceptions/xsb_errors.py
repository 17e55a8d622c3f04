from app.shared.domain.exceptions.common_errors import BaseZakharovError


class WindowContractError(BaseZakharovError):
    """Raised when a space-time norm is requested for a field that was never windowed."""
    error_code: str = "WINDOW_CONTRACT_VIOLATION"


class HypothesisViolationError(BaseZakharovError):
    error_code: str = "HYPOTHESIS_VIOLATION"
