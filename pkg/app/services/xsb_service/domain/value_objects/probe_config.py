import math
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from app.services.xsb_service.domain.enums.probe_variant import SamplerKind
from app.services.xsb_service.domain.value_objects.space_time_lattice import is_power_of_two
from app.shared.domain.enums.enums import SignPolicy


class ProbeConfig(BaseModel):
    """Parameters of the estimate probes; b = 1/2+ is realized as 0.55."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    b_exponent: float = 0.55
    s1: int = 0
    s2: int = 1
    s: int = 0
    trials: int = 200
    seed: int = 0
    resolutions: List[int] = [32, 64]
    delta: float = 0.05
    period: float = 8.0 * math.pi
    window_length: float = 1.0
    flank_fraction: float = 0.1
    m_steps: Optional[int] = None
    sampler: SamplerKind = SamplerKind.FREE
    modulation: float = 4.0
    decay: float = 2.0
    sign_policy: SignPolicy = SignPolicy.NEAREST
    include_trace_term: bool = True
    swap_conjugate: bool = False
    lemma_period: float = 2.0 * math.pi
    lemma_m_steps: Optional[int] = None
    lemma_k_min: float = 10.0
    lemma_k_width: float = 0.5
    lemma_surface_width: float = 8.0

    @field_validator("b_exponent")
    @classmethod
    def validate_b(cls, value):
        if not value > 0.5:
            raise ValueError("b_exponent must exceed 1/2")
        return value

    @field_validator("trials")
    @classmethod
    def validate_trials(cls, value):
        if value < 1:
            raise ValueError("trials must be at least 1")
        return value

    @field_validator("seed")
    @classmethod
    def validate_seed(cls, value):
        if not 0 <= value < 2 ** 64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        return value

    @field_validator("resolutions")
    @classmethod
    def validate_resolutions(cls, value):
        if not value or any(n < 8 or not is_power_of_two(n) for n in value):
            raise ValueError("resolutions must be powers of two >= 8")
        return value

    @field_validator("delta")
    @classmethod
    def validate_delta(cls, value):
        if not 0.0 < value < 1.0:
            raise ValueError("delta must lie in (0, 1)")
        return value

    @field_validator("period", "window_length", "lemma_period", "lemma_k_width", "lemma_surface_width")
    @classmethod
    def validate_positive(cls, value):
        if not (math.isfinite(value) and value > 0):
            raise ValueError("must be positive and finite")
        return value

    @field_validator("flank_fraction")
    @classmethod
    def validate_flank(cls, value):
        if not 0.0 < value <= 0.5:
            raise ValueError("flank_fraction must lie in (0, 0.5]")
        return value

    @field_validator("m_steps", "lemma_m_steps")
    @classmethod
    def validate_m_steps(cls, value):
        if value is not None and (value < 8 or not is_power_of_two(value)):
            raise ValueError("time lattice size must be a power of two >= 8")
        return value

    @field_validator("modulation", "decay", "lemma_k_min", "s")
    @classmethod
    def validate_nonnegative(cls, value):
        if value < 0:
            raise ValueError("must be nonnegative")
        return value

    @model_validator(mode="after")
    def validate_orders(self):
        if self.s1 > self.s2:
            raise ValueError(f"s1 <= s2 is required (got s1={self.s1}, s2={self.s2})")
        if self.s1 < 0:
            raise ValueError("s1 must be nonnegative")
        return self
