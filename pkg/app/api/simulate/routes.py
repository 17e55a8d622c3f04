import argparse
from pathlib import Path

from app.api.base_routes import BaseRoute, add_common_arguments, output_directory
from app.api.simulate.schemas import DuhamelSummarySchema, SimulationSummarySchema


def add_solver_overrides(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("overrides")
    group.add_argument("--n-points", type=int, help="grid.n_points (power of two >= 8, default 128)")
    group.add_argument("--period", type=float, help="grid.period (default 32*pi)")
    group.add_argument("--dealias", action=argparse.BooleanOptionalAction, default=None,
                       help="grid.dealias (default on)")
    group.add_argument("--dt", type=float, help="solver.dt (required unless in --config)")
    group.add_argument("--t-final", type=float, help="solver.t_final (required unless in --config)")
    group.add_argument("--checkpoint-every", type=int, help="solver.checkpoint_every (default 100)")


def solver_overrides(args: argparse.Namespace) -> dict:
    return {
        "grid": {"n_points": args.n_points, "period": args.period, "dealias": args.dealias},
        "solver": {"dt": args.dt, "t_final": args.t_final, "checkpoint_every": args.checkpoint_every},
    }


class SimulateRoute(BaseRoute):
    """
    Route for evolving initial data and writing diagnostics and checkpoints
    """
    name = "simulate"
    help = "evolve the Zakharov system; writes diagnostics.csv and checkpoints/step_<n>.zklb"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_common_arguments(parser)
        parser.add_argument("--resume", metavar="PATH", help="continue from a checkpoint file")
        add_solver_overrides(parser)
        parser.add_argument("--duhamel-csv", action=argparse.BooleanOptionalAction, default=None,
                            help="also write duhamel.csv (output.duhamel_csv)")

    def handle(self, args: argparse.Namespace) -> None:
        overrides = solver_overrides(args)
        overrides["output"] = {"duhamel_csv": args.duhamel_csv}
        config = self._load_config(args, **overrides)
        out_dir = output_directory(args, config)

        outcome = self._run_service().simulate(config, out_dir, resume=args.resume)
        trajectory = outcome.trajectory
        initial_mass = trajectory.data.phi_hat.l2_norm()
        drift = max((abs(r.mass - initial_mass) / initial_mass for r in trajectory.records), default=0.0) \
            if initial_mass > 0 else 0.0
        summary = SimulationSummarySchema().dump({
            "final_time": trajectory.final_state.t,
            "checkpoints": len(trajectory.checkpoints),
            "records": len(trajectory.records),
            "max_mass_drift": drift,
            "files": [str(path) for path in outcome.files],
        })
        self._success_response(data=summary, message=f"Simulation written to {Path(out_dir)}")


class CheckDuhamelRoute(BaseRoute):
    """
    Route for the residual of n = W(a,b) + Box^-1 Laplacian |u|^2 along a run
    """
    name = "check-duhamel"
    help = "simulate and write the Duhamel residual series to duhamel.csv"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_common_arguments(parser)
        add_solver_overrides(parser)

    def handle(self, args: argparse.Namespace) -> None:
        config = self._load_config(args, **solver_overrides(args))
        out_dir = output_directory(args, config)
        residuals = self._run_service().check_duhamel(config, out_dir)
        summary = DuhamelSummarySchema().dump({
            "checkpoints": len(residuals),
            "max_residual": max((r.residual for r in residuals), default=0.0),
            "output": str(Path(out_dir) / "duhamel.csv"),
        })
        self._success_response(data=summary, message="Duhamel check complete")
