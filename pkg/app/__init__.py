from app.config import config_by_name
from app.container import Container
from app.extensions import container, init_resources


def create_app(config_name: str = 'production') -> Container:
    """Application factory: configured container for the given environment"""
    if config_name not in config_by_name:
        raise KeyError(f"Unknown environment '{config_name}'; expected one of {sorted(config_by_name)}")
    init_resources(config_by_name[config_name])
    return container
