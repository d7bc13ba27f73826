# src/utils/cli_decorators.py
"""Decorators that turn command functions into process exit codes."""

import argparse
import functools
import sys
from dataclasses import dataclass
from typing import Any, Callable

import structlog
from pydantic import BaseModel, ValidationError

from src.shared.domain.exceptions.base import DomainException

logger = structlog.get_logger()

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


@dataclass
class CliResult:
    exit_code: int = EXIT_OK
    documents: int = 0


class CliException(Exception):
    def __init__(self, exit_code: int, detail: str):
        self.exit_code = exit_code
        self.detail = detail
        super().__init__(detail)


def _diagnostic(detail: str) -> None:
    print(f"ohmcurve: error: {detail}", file=sys.stderr)


def cli_handler(func: Callable[..., Any]) -> Callable[[argparse.Namespace], int]:
    """Run a command and map its outcome to 0 (pass), 1 (violation) or 2 (usage/input error)."""

    @functools.wraps(func)
    def wrapper(args: argparse.Namespace) -> int:
        try:
            result = func(args)
            if isinstance(result, CliResult):
                return result.exit_code
            return EXIT_OK if result is None else int(result)
        except CliException as e:
            _diagnostic(e.detail)
            return e.exit_code
        except DomainException as e:
            logger.debug("Command rejected", error_code=e.error_code, **{k: str(v) for k, v in e.context.items()})
            _diagnostic(e.message)
            return EXIT_USAGE
        except OSError as e:
            _diagnostic(str(e))
            return EXIT_USAGE
        except Exception as e:
            logger.error("CLI handler error", error=str(e), exc_info=True)
            _diagnostic(f"internal error: {e}")
            return EXIT_USAGE

    return wrapper


def validate_config(config_class: type[BaseModel]):
    """Build ``config_class`` from the parsed arguments and pass it as ``config``."""

    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(args: argparse.Namespace, *rest, **kwargs):
            try:
                kwargs["config"] = config_class.model_validate(vars(args))
            except ValidationError as e:
                details = "; ".join(error["msg"] for error in e.errors())
                raise CliException(EXIT_USAGE, f"Invalid arguments: {details}")
            return func(args, *rest, **kwargs)

        return wrapper

    return decorator
