import math
from dataclasses import dataclass, field
from typing import Dict, Optional


@dataclass(frozen=True)
class IncrementTerms:
    """d/dt ||B^s u||^2 and its split into linear, free-wave and cubic parts."""
    i_total: float
    i1: float
    i2: float
    i3: float

    @property
    def defect(self) -> float:
        return self.i_total - (self.i1 + self.i2 + self.i3)


@dataclass(frozen=True)
class DiagnosticsRecord:
    t: float
    mass: float
    hamiltonian: float
    h1_u: float
    l2_n: float
    hneg1_ndot: float
    hs_norms: Dict[float, float] = field(default_factory=dict)
    increment: Optional[IncrementTerms] = None

    @property
    def h1_triple(self) -> float:
        """||u||_{H^1}, ||n||_{L^2} and ||ndot||_{H-hat^-1} combined in l2."""
        return math.sqrt(self.h1_u ** 2 + self.l2_n ** 2 + self.hneg1_ndot ** 2)

    def is_finite(self) -> bool:
        values = [self.t, self.mass, self.hamiltonian, self.h1_u, self.l2_n, self.hneg1_ndot]
        values.extend(self.hs_norms.values())
        if self.increment is not None:
            inc = self.increment
            values.extend([inc.i_total, inc.i1, inc.i2, inc.i3])
        return all(math.isfinite(v) for v in values)
