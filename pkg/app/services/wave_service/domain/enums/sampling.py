from enum import Enum


class Sampling(str, Enum):
    """Where forcing snapshots sit inside each quadrature step."""
    MIDPOINT = "midpoint"   # one snapshot per step, at its center
    ENDPOINT = "endpoint"   # snapshots at step boundaries, averaged per step

    def __str__(self) -> str:
        return self.value
