import argparse

from app.api.base_routes import BaseRoute, add_common_arguments, output_directory
from app.api.probe.schemas import ResolutionSummarySchema
from app.services.xsb_service.domain.enums.probe_variant import ProbeVariant, SamplerKind

# probes read no solver settings, but [solver] is a required section
SOLVER_PLACEHOLDER = {"dt": 1.0, "t_final": 1.0}


class ProbeRoute(BaseRoute):
    """
    Route for the randomized estimate probes
    """
    name = "probe"
    help = "ratio probes for the Strichartz, bilinear (prop1, prop2) and trilinear (lemma) estimates"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("variant", choices=[v.value for v in ProbeVariant])
        add_common_arguments(parser)
        group = parser.add_argument_group("overrides")
        group.add_argument("--trials", type=int, help="probe.trials (default 200)")
        group.add_argument("--b", type=float, dest="b_exponent", help="probe.b_exponent (default 0.55)")
        group.add_argument("--s1", type=int, help="probe.s1 (default 0)")
        group.add_argument("--s2", type=int, help="probe.s2 (default 1)")
        group.add_argument("--resolutions", help="probe.resolutions, comma separated (default 32, 64)")
        group.add_argument("--sampler", choices=[k.value for k in SamplerKind], help="probe.sampler")
        group.add_argument("--m-steps", type=int, help="probe.m_steps (default: automatic)")
        group.add_argument("--swap-conjugate", action=argparse.BooleanOptionalAction, default=None,
                           help="conjugate the first factor instead of the second")

    def handle(self, args: argparse.Namespace) -> None:
        config = self._load_config(
            args,
            solver={} if args.config else SOLVER_PLACEHOLDER,
            probe={
                "trials": args.trials, "b_exponent": args.b_exponent, "s1": args.s1, "s2": args.s2,
                "resolutions": args.resolutions, "sampler": args.sampler, "m_steps": args.m_steps,
                "swap_conjugate": args.swap_conjugate,
            },
        )
        out_dir = output_directory(args, config)

        report = self._run_service().probe(ProbeVariant(args.variant), config, out_dir)
        schema = ResolutionSummarySchema()
        for result in report.results:
            self._success_response(data=schema.dump({
                "n_points": result.n_points, "m_steps": result.m_steps, "trials": len(result.trials),
                "discarded": result.discarded, "max_ratio": result.max_ratio,
            }), message=f"{ProbeVariant(report.variant).value} N={result.n_points}")
