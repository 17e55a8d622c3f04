from app.shared.domain.exceptions.common_errors import BaseZakharovError, DomainError


class MeanFreeViolationError(DomainError):
    """Raised when a field that must be a divergence has a nonzero mean."""
    error_code: str = "MEAN_FREE_VIOLATION"


class StateInvariantError(DomainError):
    error_code: str = "STATE_INVARIANT_VIOLATION"


class InvalidArgumentError(BaseZakharovError):
    error_code: str = "INVALID_ARGUMENT"
