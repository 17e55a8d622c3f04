import configparser
import logging
from enum import Enum
from pathlib import Path
from typing import Union

import pydantic

from app.services.run_service.domain.value_objects.run_config import RunConfig
from app.shared.domain.exceptions.common_errors import ConfigurationError, ResourceNotFoundError

# Configure logger
logger = logging.getLogger(__name__)

SECTIONS = ("grid", "solver", "data", "diagnostics", "probe", "output")


def _render(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, (list, tuple)):
        return ", ".join(_render(item) for item in value)
    return repr(value) if isinstance(value, float) else str(value)


class ConfigRepository:
    """Run configuration files: ``key = value`` lines under [section] headers."""

    def parse(self, path: Union[str, Path]) -> RunConfig:
        path = Path(path)
        if not path.is_file():
            raise ResourceNotFoundError(f"Config file not found: {path}")
        return self.parse_text(path.read_text(), source=str(path))

    def parse_text(self, text: str, source: str = "<config>") -> RunConfig:
        parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=("#", ";"))
        try:
            parser.read_string(text, source=source)
        except configparser.Error as e:
            raise ConfigurationError(f"{source}: malformed config ({e})") from e

        unknown = [name for name in parser.sections() if name not in SECTIONS]
        if unknown:
            raise ConfigurationError(
                f"{source}: unknown section [{unknown[0]}]; expected one of {', '.join(SECTIONS)}",
                errors={"section": unknown[0]}
            )
        payload = {name: dict(parser.items(name)) for name in parser.sections()}

        try:
            config = RunConfig.model_validate(payload)
        except pydantic.ValidationError as e:
            raise self._configuration_error(source, e) from e
        logger.info(f"Loaded run config from {source}")
        return config

    def write(self, config: RunConfig, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.render(config))
        return path

    def render(self, config: RunConfig) -> str:
        lines = []
        for name in SECTIONS:
            section = getattr(config, name)
            lines.append(f"[{name}]")
            for key, value in section.model_dump(exclude_none=True).items():
                lines.append(f"{key} = {_render(value)}")
            lines.append("")
        return "\n".join(lines)

    @staticmethod
    def _configuration_error(source: str, error: pydantic.ValidationError) -> ConfigurationError:
        first = error.errors()[0]
        key = ".".join(str(part) for part in first["loc"])
        if first["type"] == "extra_forbidden":
            message = f"{source}: unknown key '{key}'"
        elif first["type"] == "missing":
            message = f"{source}: missing required key '{key}'"
        else:
            message = f"{source}: invalid value for '{key}': {first['msg']}"
        return ConfigurationError(
            message,
            errors={"key": key, "problems": [f"{'.'.join(map(str, e['loc']))}: {e['msg']}" for e in error.errors()]}
        )
