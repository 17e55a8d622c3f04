import logging
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Union

from app.services.diagnostics_service.domain.entities.bound_iteration import BoundIteration
from app.services.diagnostics_service.domain.entities.growth_fit import GrowthFit
from app.services.diagnostics_service.domain.value_objects.diagnostics_schedule import DiagnosticsSchedule
from app.services.diagnostics_service.service import DiagnosticsService
from app.services.run_service.application.use_cases.initial_condition_factory import InitialConditionFactory
from app.services.run_service.domain.value_objects.run_config import RunConfig
from app.services.run_service.infrastructure.persistence.config_repository import ConfigRepository
from app.services.run_service.infrastructure.persistence.table_repository import TableRepository
from app.services.solver_service.application.use_cases.duhamel_check import DuhamelResidual
from app.services.solver_service.domain.entities.initial_data import InitialData
from app.services.solver_service.domain.entities.trajectory import Trajectory
from app.services.solver_service.domain.entities.zakharov_state import ZakharovState
from app.services.solver_service.domain.exceptions.solver_errors import InstabilityError
from app.services.solver_service.domain.value_objects.split_step_config import SplitStepConfig
from app.services.solver_service.service import SolverService
from app.services.spectral_service.domain.value_objects.grid_spec import GridSpec
from app.services.xsb_service.domain.entities.probe_report import ProbeReport
from app.services.xsb_service.domain.enums.probe_variant import ProbeVariant
from app.services.xsb_service.service import XsbService

# Configure logger
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimulationOutcome:
    trajectory: Trajectory
    files: List[Path]


class RunService:
    """
    Run orchestration behind the command line: builds grids and data from a
    RunConfig, drives the numeric services and writes every artifact.
    """

    def __init__(self, solver_service: SolverService, diagnostics_service: DiagnosticsService,
                 xsb_service: XsbService, config_repository: Optional[ConfigRepository] = None,
                 table_repository: Optional[TableRepository] = None):
        self._solver = solver_service
        self._diagnostics = diagnostics_service
        self._xsb = xsb_service
        self._configs = config_repository or ConfigRepository()
        self._tables = table_repository or TableRepository()
        self._initial_conditions = InitialConditionFactory()
        logger.info("Run service initialized")

    # configuration

    def parse_config(self, path: Union[str, Path]) -> RunConfig:
        return self._configs.parse(path)

    def write_config(self, config: RunConfig, path: Union[str, Path]) -> Path:
        return self._configs.write(config, path)

    def build_grid(self, config: RunConfig) -> GridSpec:
        return GridSpec(n_points=config.grid.n_points, period=config.grid.period,
                        dealias_enabled=config.grid.dealias)

    def build_initial_data(self, config: RunConfig) -> InitialData:
        return self._initial_conditions.build(self.build_grid(config), config.data)

    def split_step_config(self, config: RunConfig) -> SplitStepConfig:
        solver = config.solver
        return SplitStepConfig(
            dt=solver.dt, scheme=solver.scheme, dealias=config.grid.dealias,
            checkpoint_every=solver.checkpoint_every,
            keep_density_history=solver.keep_density_history,
            lifetime_alpha=solver.lifetime_alpha, lifetime_c=solver.lifetime_c,
        )

    def schedule(self, config: RunConfig) -> DiagnosticsSchedule:
        return DiagnosticsSchedule(**config.diagnostics.model_dump())

    # subcommands

    def simulate(self, config: RunConfig, out_dir: Union[str, Path],
                 resume: Optional[Union[str, Path]] = None) -> SimulationOutcome:
        out_dir = Path(out_dir)
        data = self.build_initial_data(config)
        split = self.split_step_config(config)
        start = self._solver.load_checkpoint(resume) if resume else None
        start_step = round(start.t / split.dt) if start is not None else None
        files: List[Path] = []

        def write_checkpoint(step: int, state: ZakharovState) -> None:
            if not config.output.write_checkpoints or step == start_step:
                return
            files.append(self._solver.save_checkpoint(state, self._checkpoint_path(out_dir, step)))

        try:
            trajectory = self._solver.simulate(data, config.solver.t_final, split, self.schedule(config),
                                               start, write_checkpoint)
        except InstabilityError as e:
            if e.last_good is not None:
                abort_path = self._solver.save_checkpoint(e.last_good, out_dir / "checkpoints" / "abort.zklb")
                logger.error(f"Instability abort; last good state saved to {abort_path}")
            raise

        files.append(self._tables.write_diagnostics(out_dir / "diagnostics.csv", trajectory.records,
                                                    config.diagnostics.s_values))
        if config.output.duhamel_csv and not trajectory.resumed:
            residuals = self._solver.duhamel_check(trajectory)
            files.append(self._tables.write_duhamel(out_dir / "duhamel.csv", residuals))
        return SimulationOutcome(trajectory, files)

    def check_duhamel(self, config: RunConfig, out_dir: Union[str, Path]) -> List[DuhamelResidual]:
        data = self.build_initial_data(config)
        trajectory = self._solver.simulate(data, config.solver.t_final, self.split_step_config(config))
        residuals = self._solver.duhamel_check(trajectory)
        self._tables.write_duhamel(Path(out_dir) / "duhamel.csv", residuals)
        return residuals

    def fit_growth(self, diagnostics_path: Union[str, Path], s: float, t_min: Optional[float],
                   out_dir: Union[str, Path], t_min_fraction: float = 0.1) -> GrowthFit:
        records = self._tables.read_diagnostics(diagnostics_path)
        if t_min is None:
            horizon = max((r.t for r in records), default=0.0)
            t_min = t_min_fraction * horizon
        fit = self._diagnostics.fit_growth(records, s, t_min)
        self._diagnostics.check_growth_bound(fit)
        self._tables.write_growth_fit(Path(out_dir) / "growth_fit.csv", fit)
        return fit

    def probe(self, variant: ProbeVariant, config: RunConfig, out_dir: Union[str, Path]) -> ProbeReport:
        variant = ProbeVariant(variant)
        probe_config = config.probe
        if variant is ProbeVariant.STRICHARTZ:
            report = self._xsb.strichartz_probe(probe_config)
        elif variant is ProbeVariant.LEMMA:
            report = self._xsb.lemma_probe(probe_config)
        else:
            report = self._xsb.bilinear_report(variant, probe_config)
        self._tables.write_probe_report(out_dir, report)
        return report

    def iterate_bound(self, c: float, delta: Optional[float], x0: float, steps: int,
                      out_dir: Union[str, Path], s: Optional[float] = None) -> BoundIteration:
        iteration = self._diagnostics.iterate_local_bound(c, delta, x0, steps, s=s)
        self._tables.write_bound_iteration(Path(out_dir) / "iterate_bound.csv", iteration)
        return iteration

    @staticmethod
    def _checkpoint_path(out_dir: Path, step: int) -> Path:
        return out_dir / "checkpoints" / f"step_{step}.zklb"
