import argparse

from app.api.diagnostics.routes import FitGrowthRoute, IterateBoundRoute
from app.api.probe.routes import ProbeRoute
from app.api.simulate.routes import CheckDuhamelRoute, SimulateRoute

# Subcommands, in help order
ROUTES = (
    SimulateRoute(),
    CheckDuhamelRoute(),
    FitGrowthRoute(),
    IterateBoundRoute(),
    ProbeRoute(),
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zakharov-lab",
        description="Pseudo-spectral 2D Zakharov solver with growth diagnostics and X^{s,b} estimate probes",
    )
    parser.add_argument("--threads", type=int, help="FFT worker threads (default: ZKLB_THREADS or all cores)")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")
    for route in ROUTES:
        route.register(subparsers)
    return parser
