from marshmallow import Schema, fields


class SimulationSummarySchema(Schema):
    """Summary printed after a simulate run"""
    final_time = fields.Float()
    checkpoints = fields.Int()
    records = fields.Int()
    max_mass_drift = fields.Float()
    files = fields.List(fields.Str())


class DuhamelSummarySchema(Schema):
    checkpoints = fields.Int()
    max_residual = fields.Float()
    output = fields.Str()
