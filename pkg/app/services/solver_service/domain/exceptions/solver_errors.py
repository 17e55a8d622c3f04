from typing import Optional

from app.shared.domain.exceptions.common_errors import BaseZakharovError


class InstabilityError(BaseZakharovError):
    """Raised when a nonfinite field appears; carries the last good checkpoint."""
    exit_code: int = 3
    error_code: str = "INSTABILITY_ABORT"

    def __init__(self, message: str, last_good=None, step: Optional[int] = None):
        super().__init__(message, errors={"step": step})
        self.last_good = last_good
        self.step = step


class CheckpointFormatError(BaseZakharovError):
    exit_code: int = 4
    error_code: str = "CHECKPOINT_FORMAT_ERROR"


class DuhamelUnavailableError(BaseZakharovError):
    error_code: str = "DUHAMEL_UNAVAILABLE"
