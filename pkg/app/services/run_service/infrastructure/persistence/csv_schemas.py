import math
from typing import Iterable

from marshmallow import Schema, fields


class Float17(fields.Field):
    """Float written with 17 significant digits, enough to round-trip every double."""

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return "nan"
        return format(float(value), ".17g")

    def _deserialize(self, value, attr, data, **kwargs):
        try:
            return float(value)
        except (TypeError, ValueError) as e:
            raise self.make_error("invalid") from e

    default_error_messages = {"invalid": "Not a valid number."}


def hs_column(s: float) -> str:
    return f"hs_{float(s):g}"


def diagnostics_columns(s_values: Iterable[float]) -> list:
    return (["t", "mass", "hamiltonian", "h1_u", "l2_n", "hneg1_ndot"]
            + [hs_column(s) for s in s_values]
            + ["I_total", "I1", "I2", "I3"])


def diagnostics_schema(s_values: Iterable[float]) -> type:
    """Row schema of diagnostics.csv; the hs_<s> columns follow the run's Sobolev orders."""
    spec = {name: Float17(load_default=math.nan) for name in diagnostics_columns(s_values)}
    spec["t"] = Float17(required=True)
    return Schema.from_dict(spec, name="DiagnosticsRowSchema")


class DuhamelRowSchema(Schema):
    t = Float17(required=True)
    residual = Float17(required=True)


class GrowthFitSchema(Schema):
    s = Float17(required=True)
    t_min = Float17(required=True)
    exponent_alpha = Float17(required=True)
    prefactor_c = Float17(required=True)
    residual = Float17(required=True)
    n_records = fields.Int(required=True)


class BoundIterationRowSchema(Schema):
    n = fields.Int(required=True)
    x = Float17(required=True)
    log_x_multiplicative = Float17(required=True)


class ProbeTrialSchema(Schema):
    trial = fields.Int(required=True)
    lhs = Float17(required=True)
    rhs = Float17(required=True)
    ratio = Float17(required=True)
