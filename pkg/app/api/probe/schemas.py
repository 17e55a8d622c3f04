from marshmallow import Schema, fields


class ResolutionSummarySchema(Schema):
    """One line of the probe summary"""
    n_points = fields.Int()
    m_steps = fields.Int()
    trials = fields.Int()
    discarded = fields.Int()
    max_ratio = fields.Float()
