"""Command-line entry point: logging, configuration and dispatch."""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import yaml
from pydantic import ValidationError

from . import __version__
from .commands import COMMANDS
from .errors import DomainError, GraphParseError, IdentityViolation, SpectralError
from .models import CliOverrides, RunConfig, ToleranceConfig

DEFAULT_CONFIG = Path("config.yaml")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


# Configure logging
def setup_logging(level: str = "WARNING"):
    """Configure logging for the command line; reports own stdout, logs go to stderr."""
    logging.basicConfig(
        level=getattr(logging, level.upper()),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.StreamHandler(sys.stderr)
        ],
        force=True,
    )


logger = logging.getLogger(__name__)


def load_config(path: Optional[Path] = None) -> RunConfig:
    """Defaults, then the YAML file, then JSM_* environment variables.

    Without an explicit path a missing config.yaml just means defaults.
    """
    explicit = path is not None
    path = path or DEFAULT_CONFIG
    if not path.exists():
        if explicit:
            raise DomainError(f"config file {path} not found")
        return RunConfig()

    with open(path) as f:
        config_data = yaml.safe_load(f) or {}
    if not isinstance(config_data, dict):
        raise DomainError(f"{path} must hold a YAML mapping")
    logger.debug(f"Loaded configuration from {path}")
    return RunConfig(**config_data)


def apply_tolerance_overrides(config: RunConfig, overrides: Sequence[str]) -> RunConfig:
    """Apply --tol NAME=VAL pairs.

    Raises:
        DomainError: unknown tolerance name or a value that is not a float.
    """
    if not overrides:
        return config
    tolerances = config.tolerances.model_dump()
    for item in overrides:
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep:
            raise DomainError(f"--tol expects NAME=VAL, got {item!r}")
        if name not in tolerances:
            raise DomainError(f"unknown tolerance {name!r} (choose from {', '.join(sorted(tolerances))})")
        try:
            tolerances[name] = float(value)
        except ValueError:
            raise DomainError(f"tolerance {name} needs a number, got {value!r}")
    return config.model_copy(update={"tolerances": ToleranceConfig.model_validate(tolerances)})


def apply_cli_flags(config: RunConfig, args: argparse.Namespace) -> RunConfig:
    """CLI flags override file and environment values."""
    overrides = CliOverrides(
        seed=getattr(args, "seed", None),
        trials=getattr(args, "trials", None),
        trunc=getattr(args, "trunc", None),
        output=getattr(args, "out", None),
        workers=getattr(args, "workers", None),
        log_level=getattr(args, "log_level", None),
    )
    return apply_tolerance_overrides(overrides.apply(config), getattr(args, "tol", None) or [])


def common_parser() -> argparse.ArgumentParser:
    """Flags shared by every command."""
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group("run configuration")
    group.add_argument("--config", type=Path, help="YAML config file (default: ./config.yaml if present)")
    group.add_argument("--seed", type=int, help="master seed for randomized suites")
    group.add_argument("--trials", type=int, help="random trials per suite")
    group.add_argument("--trunc", type=int, metavar="L", help="series truncation degree")
    group.add_argument("--out", choices=("text", "csv"), help="report format")
    group.add_argument("--tol", action="append", metavar="NAME=VAL", help="override a tolerance (repeatable)")
    group.add_argument("--workers", type=int, help="threads for trial loops (output order is unchanged)")
    group.add_argument("--log-level", choices=("DEBUG", "INFO", "WARNING", "ERROR"), help="stderr log level")
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jointspec",
        description="Joint spectral measures of graphs, star-product limits and hike generating functions.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    parents = [common_parser()]
    for command in COMMANDS:
        command.add_parser(subparsers, parents)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command; returns 0 on success, 1 on a failed identity, 2 on bad usage or input."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        config = apply_cli_flags(load_config(args.config), args)
    except (DomainError, ValidationError) as e:
        setup_logging()
        logger.error(f"Invalid configuration: {e}")
        return EXIT_USAGE
    setup_logging(config.logging.level)

    try:
        return args.handler(args, config)
    except IdentityViolation as e:
        logger.error(str(e))
        print(f"identity violated: {e.check.name} {e.check.context}", file=sys.stderr)
        return EXIT_FAILURE
    except (GraphParseError, DomainError) as e:
        logger.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SpectralError as e:
        logger.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE
