from pydantic import BaseModel, ConfigDict, field_validator


class SplitStepConfig(BaseModel):
    """Time-stepping parameters for the Strang splitting L(dt/2) N(dt) L(dt/2)."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    dt: float
    scheme: str = "strang"
    dealias: bool = True
    checkpoint_every: int = 100
    keep_density_history: bool = False
    lifetime_alpha: float = 2.0
    lifetime_c: float = 1.0

    @field_validator("dt")
    @classmethod
    def validate_dt(cls, value):
        """Validate that dt is positive"""
        if not value > 0:
            raise ValueError("dt must be positive")
        return value

    @field_validator("scheme")
    @classmethod
    def validate_scheme(cls, value):
        if value != "strang":
            raise ValueError("only the 'strang' scheme is available")
        return value

    @field_validator("checkpoint_every")
    @classmethod
    def validate_checkpoint_every(cls, value):
        if value < 1:
            raise ValueError("checkpoint_every must be at least 1")
        return value

    @field_validator("lifetime_c")
    @classmethod
    def validate_lifetime_c(cls, value):
        if not value > 0:
            raise ValueError("lifetime_c must be positive")
        return value
