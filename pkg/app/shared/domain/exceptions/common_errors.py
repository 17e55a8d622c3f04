from typing import Optional


class BaseZakharovError(Exception):
    """Base exception for all lab errors"""
    exit_code: int = 1
    error_code: str = "INTERNAL_ERROR"
    errors: Optional[dict] = None

    def __init__(self, message: Optional[str] = None, exit_code: Optional[int] = None,
                 errors: Optional[dict] = None) -> None:
        self.message = message or "An unexpected error occurred"
        if exit_code is not None:
            self.exit_code = exit_code
        if errors is not None:
            self.errors = errors

        super().__init__(self.message)


class ConfigurationError(BaseZakharovError):
    """Raised when a configuration value or input layout is invalid."""
    exit_code: int = 2
    error_code: str = "CONFIGURATION_ERROR"


class ValidationError(BaseZakharovError):
    exit_code: int = 1
    error_code: str = "VALIDATION_ERROR"


class DomainError(BaseZakharovError):
    exit_code: int = 1
    error_code: str = "DOMAIN_ERROR"


class ResourceNotFoundError(BaseZakharovError):
    """Raised when a requested input file cannot be found."""
    exit_code: int = 2
    error_code: str = "RESOURCE_NOT_FOUND"
