from app.services.wave_service.domain.exceptions.wave_errors import InvalidArgumentError


def predicted_exponent(s: float) -> float:
    """Upper bound (s-1)_+ on the growth exponent of ||u(t)||_{H^s}."""
    return max(s - 1.0, 0.0)


def increment_bound_exponent(s: float) -> float:
    """Power 2 - 1/(s-1) of ||u||_{H^s} that controls the increment over one local step."""
    if s <= 1:
        raise InvalidArgumentError(f"increment bound needs s > 1, got {s}")
    return 2.0 - 1.0 / (s - 1.0)


def delta_from_order(s: float) -> float:
    """delta = 1/(s-1), so that the local bound iterates to t^(s-1)."""
    if s < 2:
        raise InvalidArgumentError(f"delta = 1/(s-1) lies in (0, 1] only for s >= 2, got {s}")
    return 1.0 / (s - 1.0)
