import math

from app.services.wave_service.domain.exceptions.wave_errors import InvalidArgumentError


def lifetime_estimate(h1_norm: float, alpha: float, c: float) -> float:
    """Guaranteed existence time c * ||(phi, a, b)||^-alpha of the local theory."""
    if not math.isfinite(h1_norm) or h1_norm < 0:
        raise InvalidArgumentError(f"h1_norm must be finite and nonnegative, got {h1_norm}")
    if alpha == 0:
        return float(c)
    if h1_norm == 0:
        return math.inf
    return float(c * h1_norm ** (-alpha))


def batch_length(h1_norm: float, dt: float, checkpoint_every: int,
                 alpha: float, c: float) -> int:
    """Steps between finiteness checks: never past a checkpoint, never past one lifetime."""
    lifetime = lifetime_estimate(h1_norm, alpha, c)
    if math.isinf(lifetime):
        return checkpoint_every
    return min(checkpoint_every, max(1, int(math.floor(lifetime / dt))))
