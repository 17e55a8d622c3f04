from app.services.xsb_service.domain.entities.probe_report import ProbeTrial
from app.services.xsb_service.domain.entities.space_time_field import SpaceTimeField


class StrichartzEstimateUseCase:
    """||B^s u||_{L^4_{x,t}} against ||u||_{X_{s,b}}; s = 0 is the paraboloid Strichartz estimate."""

    def execute(self, u: SpaceTimeField, b: float, s: float = 0.0, trial: int = 0) -> ProbeTrial:
        lhs = u.apply_B(s).padded().lp_norm(4)
        rhs = u.xsb_norm(s, b)
        return ProbeTrial(trial=trial, lhs=lhs, rhs=rhs)
