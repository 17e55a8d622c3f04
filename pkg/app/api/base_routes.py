import argparse
import logging
import sys
from typing import Any, Dict, Optional

import pydantic
from marshmallow import Schema
from marshmallow import ValidationError as MarshmallowValidationError

from app.extensions import container
from app.services.run_service.domain.value_objects.run_config import RunConfig
from app.shared.domain.exceptions.common_errors import BaseZakharovError, ConfigurationError

# Configure logger
logger = logging.getLogger(__name__)


class BaseRoute:
    """Base route class with common functionality for all subcommands"""
    name: str = ""
    help: str = ""

    def register(self, subparsers) -> argparse.ArgumentParser:
        parser = subparsers.add_parser(self.name, help=self.help, description=self.help)
        self.add_arguments(parser)
        parser.set_defaults(route=self)
        return parser

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        pass

    def handle(self, args: argparse.Namespace) -> None:
        raise NotImplementedError

    def dispatch(self, args: argparse.Namespace) -> int:
        """Run the subcommand and map exceptions to exit codes"""
        try:
            self.handle(args)
            return 0
        except BaseZakharovError as e:
            return self._error_response(e.message, e.exit_code)
        except Exception as e:
            logger.error(f"Unexpected failure in {self.name}: {str(e)}", exc_info=True)
            return self._error_response(f"An unexpected error occurred: {e}", 1)

    def _success_response(self, data: Optional[Dict[str, Any]] = None, message: str = "Success") -> None:
        print(message)
        for key, value in (data or {}).items():
            print(f"{key} = {value}")

    def _error_response(self, message: str, exit_code: int) -> int:
        print(f"error: {message}", file=sys.stderr)
        return exit_code

    @staticmethod
    def _load_arguments(schema: Schema, values: Dict[str, Any]) -> Dict[str, Any]:
        try:
            return schema.load({k: v for k, v in values.items() if v is not None})
        except MarshmallowValidationError as e:
            key = next(iter(e.messages))
            raise ConfigurationError(f"invalid argument --{key.replace('_', '-')}: {e.messages[key]}",
                                     errors=e.messages) from e

    @staticmethod
    def _run_service():
        return container.run_service()

    def _load_config(self, args: argparse.Namespace, **overrides) -> RunConfig:
        """--config file (or defaults) with --seed and per-key flags applied on top"""
        if getattr(args, "config", None):
            config = self._run_service().parse_config(args.config)
            payload = config.model_dump()
        else:
            payload = {}
        for section, values in overrides.items():
            payload.setdefault(section, {}).update({k: v for k, v in values.items() if v is not None})
        if getattr(args, "seed", None) is not None:
            payload.setdefault("data", {})["seed"] = args.seed
            payload.setdefault("probe", {})["seed"] = args.seed
        return self._validate_config(payload)

    @staticmethod
    def _validate_config(payload: Dict[str, Any]) -> RunConfig:
        try:
            return RunConfig.model_validate(payload)
        except pydantic.ValidationError as e:
            first = e.errors()[0]
            key = ".".join(str(part) for part in first["loc"])
            raise ConfigurationError(f"invalid configuration at '{key}': {first['msg']}",
                                     errors={"key": key}) from e


def add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="PATH", help="run configuration file ([grid], [solver], ... sections)")
    parser.add_argument("--seed", type=int, metavar="U64", help="overrides data.seed and probe.seed")
    parser.add_argument("--out", metavar="DIR", help="output directory (default: output.directory)")


def output_directory(args: argparse.Namespace, config: Optional[RunConfig] = None) -> str:
    if getattr(args, "out", None):
        return args.out
    return config.output.directory if config is not None else "out"
