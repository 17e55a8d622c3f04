import math
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, field_validator

from app.services.run_service.domain.enums.initial_condition_family import (
    InitialConditionFamily,
    WaveDataFamily,
)
from app.services.xsb_service.domain.value_objects.probe_config import ProbeConfig
from app.services.xsb_service.domain.value_objects.space_time_lattice import is_power_of_two


def split_list(value):
    """'1, 2, 4' -> ['1', '2', '4'] for list-valued keys read from text."""
    if isinstance(value, str):
        return [item.strip() for item in value.split(",") if item.strip()]
    return value


class GridSection(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    n_points: int = 128
    period: float = 32.0 * math.pi
    dealias: bool = True

    @field_validator("n_points")
    @classmethod
    def validate_n_points(cls, value):
        if value < 8 or not is_power_of_two(value):
            raise ValueError("n_points must be a power of two >= 8")
        return value

    @field_validator("period")
    @classmethod
    def validate_period(cls, value):
        if not (math.isfinite(value) and value > 0):
            raise ValueError("period must be positive and finite")
        return value


class SolverSection(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    dt: float
    t_final: float
    checkpoint_every: int = 100
    scheme: str = "strang"
    lifetime_alpha: float = 2.0
    lifetime_c: float = 1.0
    keep_density_history: bool = False

    @field_validator("dt", "t_final")
    @classmethod
    def validate_positive(cls, value):
        if not (math.isfinite(value) and value > 0):
            raise ValueError("must be positive and finite")
        return value


class DataSection(BaseModel):
    """Initial-condition family for phi and the wave data (a, b)."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    family: InitialConditionFamily = InitialConditionFamily.GAUSSIAN_PACKET
    amplitude: float = 0.1
    width: float = 4.0
    center_x: Optional[float] = None
    center_y: Optional[float] = None
    wavenumber_x: float = 0.5
    wavenumber_y: float = 0.0
    mode_m1: int = 1
    mode_m2: int = 0
    n_modes: int = 8
    decay: float = 2.0
    seed: int = 0
    wave_family: WaveDataFamily = WaveDataFamily.GAUSSIAN
    wave_amplitude: float = 0.1
    wave_width: float = 4.0
    b_mean: float = 0.0

    @field_validator("width", "wave_width")
    @classmethod
    def validate_width(cls, value):
        if not value > 0:
            raise ValueError("widths must be positive")
        return value

    @field_validator("n_modes")
    @classmethod
    def validate_n_modes(cls, value):
        if value < 1:
            raise ValueError("n_modes must be at least 1")
        return value

    @field_validator("seed")
    @classmethod
    def validate_seed(cls, value):
        if not 0 <= value < 2 ** 64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        return value

    @field_validator("b_mean")
    @classmethod
    def validate_b_mean(cls, value):
        if value != 0:
            raise ValueError(
                "b must be mean-free: H-hat^-1 data require b = div V for a periodic V, "
                "so b_mean must be 0"
            )
        return value


class DiagnosticsSection(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    s_values: List[float] = [1.0, 2.0]
    increment: bool = False
    increment_s: int = 2
    t_min_fraction: float = 0.1

    @field_validator("s_values", mode="before")
    @classmethod
    def split_s_values(cls, value):
        return split_list(value)

    @field_validator("t_min_fraction")
    @classmethod
    def validate_t_min_fraction(cls, value):
        if not 0.0 <= value < 1.0:
            raise ValueError("t_min_fraction must lie in [0, 1)")
        return value


class ProbeSection(ProbeConfig):
    @field_validator("resolutions", mode="before")
    @classmethod
    def split_resolutions(cls, value):
        return split_list(value)


class OutputSection(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    directory: str = "out"
    formats: List[str] = ["csv"]
    write_checkpoints: bool = True
    duhamel_csv: bool = False

    @field_validator("formats", mode="before")
    @classmethod
    def split_formats(cls, value):
        return split_list(value)

    @field_validator("formats")
    @classmethod
    def validate_formats(cls, value):
        unsupported = [fmt for fmt in value if fmt != "csv"]
        if unsupported:
            raise ValueError(f"unsupported output formats {unsupported}; only csv is written")
        return value


class RunConfig(BaseModel):
    """Validated content of one run configuration file."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    grid: GridSection = GridSection()
    solver: SolverSection
    data: DataSection = DataSection()
    diagnostics: DiagnosticsSection = DiagnosticsSection()
    probe: ProbeSection = ProbeSection()
    output: OutputSection = OutputSection()

    def with_overrides(self, **sections) -> "RunConfig":
        """Copy with per-section key overrides, re-validated: with_overrides(data={'seed': 3})."""
        payload = self.model_dump()
        for section, values in sections.items():
            payload[section].update({k: v for k, v in values.items() if v is not None})
        return RunConfig.model_validate(payload)
