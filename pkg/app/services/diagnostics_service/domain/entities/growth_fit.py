from dataclasses import dataclass


@dataclass(frozen=True)
class GrowthFit:
    """Least-squares fit ||u(t)||_{H^s} ~ C t^alpha in log-log coordinates."""
    s: float
    t_min: float
    exponent_alpha: float
    prefactor_c: float
    residual: float      # RMS in log-log coordinates
    n_records: int
