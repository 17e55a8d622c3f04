import logging

from app.container import Container
from app.shared.infrastructure.logging_config import configure_logging

container = Container()

# Configure logger
logger = logging.getLogger(__name__)


def init_resources(config) -> Container:
    """Configure logging and load the process configuration into the container"""
    configure_logging(config.LOG_LEVEL, config.LOG_FORMAT)

    container.config.from_dict({
        'threads': config.THREADS,
        'debug': config.DEBUG,
        'testing': config.TESTING,
    })
    logger.debug(f"Resources initialized (threads={config.THREADS})")
    return container
