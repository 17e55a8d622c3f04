import math
from dataclasses import dataclass, field
from typing import Dict, List

# trials with a right-hand side below this are discarded
RHS_FLOOR = 1e-12


@dataclass(frozen=True)
class ProbeTrial:
    trial: int
    lhs: float
    rhs: float

    @property
    def ratio(self) -> float:
        return self.lhs / self.rhs if self.rhs >= RHS_FLOOR else math.nan

    @property
    def usable(self) -> bool:
        return self.rhs >= RHS_FLOOR and math.isfinite(self.lhs) and math.isfinite(self.rhs)


@dataclass
class ResolutionResult:
    n_points: int
    m_steps: int
    trials: List[ProbeTrial] = field(default_factory=list)
    discarded: int = 0

    @property
    def max_ratio(self) -> float:
        return max((t.ratio for t in self.trials), default=math.nan)


@dataclass
class ProbeReport:
    """Per-trial ratios of one probe variant, grouped by spatial resolution."""
    variant: str
    metadata: Dict[str, object]
    results: List[ResolutionResult] = field(default_factory=list)

    def result_for(self, n_points: int) -> ResolutionResult:
        for result in self.results:
            if result.n_points == n_points:
                return result
        raise KeyError(n_points)

    def max_ratio_growth(self) -> float:
        """max ratio at the finest resolution over that at the coarsest."""
        ordered = sorted(self.results, key=lambda r: r.n_points)
        return ordered[-1].max_ratio / ordered[0].max_ratio
