from dependency_injector import containers, providers

from app.services.diagnostics_service.service import DiagnosticsService
from app.services.run_service.infrastructure.persistence.config_repository import ConfigRepository
from app.services.run_service.infrastructure.persistence.table_repository import TableRepository
from app.services.run_service.service import RunService
from app.services.solver_service.infrastructure.persistence.checkpoint_repository import CheckpointRepository
from app.services.solver_service.service import SolverService
from app.services.spectral_service.service import SpectralService
from app.services.wave_service.service import WaveService
from app.services.xsb_service.service import XsbService


class Container(containers.DeclarativeContainer):
    """IoC container."""

    # Configuration
    config = providers.Configuration()

    # Stateless numeric services
    spectral_service = providers.Singleton(SpectralService)
    wave_service = providers.Singleton(WaveService)
    diagnostics_service = providers.Singleton(DiagnosticsService)
    xsb_service = providers.Singleton(XsbService, threads=config.threads)

    # Adapters
    checkpoint_repository = providers.Factory(CheckpointRepository)
    config_repository = providers.Factory(ConfigRepository)
    table_repository = providers.Factory(TableRepository)

    # Services owning adapters
    solver_service = providers.Factory(
        SolverService,
        diagnostics_service=diagnostics_service,
        checkpoint_repository=checkpoint_repository
    )
    run_service = providers.Factory(
        RunService,
        solver_service=solver_service,
        diagnostics_service=diagnostics_service,
        xsb_service=xsb_service,
        config_repository=config_repository,
        table_repository=table_repository
    )
