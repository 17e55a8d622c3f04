from typing import List

from pydantic import BaseModel, ConfigDict, field_validator


class DiagnosticsSchedule(BaseModel):
    """What to record at every checkpoint."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    s_values: List[float] = [1.0, 2.0]
    increment: bool = False
    increment_s: int = 2
    t_min_fraction: float = 0.1

    @field_validator("s_values")
    @classmethod
    def validate_s_values(cls, value):
        if any(s < 0 for s in value):
            raise ValueError("Sobolev orders must be nonnegative")
        return sorted(set(value))

    @field_validator("t_min_fraction")
    @classmethod
    def validate_t_min_fraction(cls, value):
        if not 0.0 <= value < 1.0:
            raise ValueError("t_min_fraction must lie in [0, 1)")
        return value
