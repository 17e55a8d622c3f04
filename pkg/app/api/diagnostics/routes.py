import argparse
from dataclasses import asdict
from pathlib import Path

from app.api.base_routes import BaseRoute, add_common_arguments, output_directory
from app.api.diagnostics.schemas import (
    BoundIterationResponseSchema,
    FitGrowthArgumentsSchema,
    GrowthFitResponseSchema,
    IterateBoundArgumentsSchema,
)
from app.services.diagnostics_service.domain.value_objects.growth_bounds import predicted_exponent


class FitGrowthRoute(BaseRoute):
    """
    Route for fitting ||u(t)||_{H^s} ~ C t^alpha to a diagnostics file
    """
    name = "fit-growth"
    help = "fit the H^s growth exponent from a diagnostics CSV; writes growth_fit.csv"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_common_arguments(parser)
        parser.add_argument("--diagnostics", metavar="PATH",
                            help="diagnostics CSV (default: <out>/diagnostics.csv)")
        parser.add_argument("--s", type=float, default=2.0, help="Sobolev order to fit (default 2)")
        parser.add_argument("--t-min", type=float,
                            help="fit window start (default: diagnostics.t_min_fraction of the horizon)")

    def handle(self, args: argparse.Namespace) -> None:
        config = self._load_config(args) if args.config else None
        out_dir = output_directory(args, config)
        arguments = self._load_arguments(FitGrowthArgumentsSchema(), {
            "diagnostics": args.diagnostics or str(Path(out_dir) / "diagnostics.csv"),
            "s": args.s,
            "t_min": args.t_min,
        })
        fraction = config.diagnostics.t_min_fraction if config is not None else 0.1
        fit = self._run_service().fit_growth(arguments["diagnostics"], arguments["s"],
                                             arguments.get("t_min"), out_dir, fraction)
        bound = predicted_exponent(fit.s)
        response = GrowthFitResponseSchema().dump({
            **asdict(fit),
            "predicted_bound": bound,
            "within_bound": fit.exponent_alpha <= bound + 0.5,
        })
        self._success_response(data=response, message="Growth fit")


class IterateBoundRoute(BaseRoute):
    """
    Route for the local-to-global recurrence x_{n+1} = x_n + c x_n^(1-delta)
    """
    name = "iterate-bound"
    help = "iterate the bound recurrence and fit its growth; writes iterate_bound.csv"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--out", metavar="DIR", help="output directory (default: out)")
        parser.add_argument("--delta", type=float, help="exponent delta in (0, 1]")
        parser.add_argument("--s", type=float, help="Sobolev order; uses delta = 1/(s-1)")
        parser.add_argument("--c", type=float, default=1.0, help="increment constant (default 1)")
        parser.add_argument("--x0", type=float, help="starting value (default 1)")
        parser.add_argument("--steps", type=int, help="number of iterations (default 100000)")

    def handle(self, args: argparse.Namespace) -> None:
        arguments = self._load_arguments(IterateBoundArgumentsSchema(), {
            "c": args.c, "delta": args.delta, "s": args.s, "x0": args.x0, "steps": args.steps,
        })
        iteration = self._run_service().iterate_bound(
            arguments["c"], arguments.get("delta"), arguments["x0"], arguments["steps"],
            output_directory(args), s=arguments.get("s"),
        )
        response = BoundIterationResponseSchema().dump({
            "delta": iteration.delta,
            "c": iteration.c,
            "steps": iteration.steps,
            "exponent": iteration.exponent,
            "predicted_exponent": iteration.predicted_exponent,
            "multiplicative_rate": iteration.multiplicative_rate,
            "multiplicative_residual": iteration.multiplicative_residual,
        })
        self._success_response(data=response, message="Bound iteration")
