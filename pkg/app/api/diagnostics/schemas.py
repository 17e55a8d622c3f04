from marshmallow import Schema, fields, validate, validates_schema, ValidationError


class FitGrowthArgumentsSchema(Schema):
    """Arguments of fit-growth"""
    diagnostics = fields.Str(required=True)
    s = fields.Float(required=True, validate=validate.Range(min=0))
    t_min = fields.Float(allow_none=True, validate=validate.Range(min=0))


class GrowthFitResponseSchema(Schema):
    s = fields.Float()
    t_min = fields.Float()
    exponent_alpha = fields.Float()
    prefactor_c = fields.Float()
    residual = fields.Float()
    n_records = fields.Int()
    predicted_bound = fields.Float()
    within_bound = fields.Bool()


class IterateBoundArgumentsSchema(Schema):
    """Arguments of iterate-bound; exactly one of delta and s"""
    c = fields.Float(required=True, validate=validate.Range(min=0, min_inclusive=False))
    delta = fields.Float(validate=validate.Range(min=0, max=1, min_inclusive=False))
    s = fields.Float(validate=validate.Range(min=2))
    x0 = fields.Float(load_default=1.0, validate=validate.Range(min=0, min_inclusive=False))
    steps = fields.Int(load_default=100000, validate=validate.Range(min=40))

    @validates_schema
    def validate_driver(self, data, **kwargs):
        if ("delta" in data) == ("s" in data):
            raise ValidationError("give exactly one of --delta and --s", field_name="delta")


class BoundIterationResponseSchema(Schema):
    delta = fields.Float()
    c = fields.Float()
    steps = fields.Int()
    exponent = fields.Float()
    predicted_exponent = fields.Float()
    multiplicative_rate = fields.Float()
    multiplicative_residual = fields.Float()
