"""Parser factory and dispatch.

Handlers take (args, LabConfig) and return a pydantic model or a list of
rows; the dispatcher renders it to stdout and maps errors to exit codes.
"""

import argparse
import json
import logging
import sys
from collections.abc import Sequence

import pandas as pd
from pydantic import BaseModel, ValidationError

from cli.config import CLIConfig
from common.errors import InvalidArgumentError, ResourceLimitError
from common.log import configure_logging
from experiment.config import LabConfig, load_config
from experiment.runner import rows_to_frame

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_RESOURCE_LIMIT = 2

Result = BaseModel | list[BaseModel]


class LabArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with status 1."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _common_options(cli_config: CLIConfig) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=["json", "csv"], default=cli_config.default_format,
        help="output format (default: %(default)s)",
    )
    common.add_argument("--config", help="lab config YAML (default: scripts/config/lab_config.yaml)")
    common.add_argument(
        "--limit-n", type=int, default=None,
        help="largest graph the exact solver accepts (default: 20)",
    )
    common.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    return common


def create_parser(cli_config: CLIConfig | None = None) -> LabArgumentParser:
    cli_config = cli_config or CLIConfig()
    parser = LabArgumentParser(
        prog=cli_config.prog,
        description=(
            "Clique covers, qualitatively independent partitions and bounds for K_t(d). "
            "Family enumeration is capped at 10^6 partitions; "
            "SCC_LAB_BUDGET overrides the cap."
        ),
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    common = _common_options(cli_config)

    # Register command groups
    from cli.commands import bounds, construct, experiment, solve, verify

    for group in (solve, construct, verify, bounds, experiment):
        group.register(subparsers, common)

    return parser


def _load_lab_config(args: argparse.Namespace) -> LabConfig:
    config = load_config(args.config)
    if args.limit_n is not None:
        if args.limit_n < 1:
            raise InvalidArgumentError(f"--limit-n must be >= 1, got {args.limit_n}")
        config.solver = config.solver.model_copy(update={"limit_n": args.limit_n})
    return config


def render(result: Result, fmt: str, indent: int = 2) -> str:
    if fmt == "csv":
        if isinstance(result, list):
            if not result:
                return ""
            frame = rows_to_frame(result, type(result[0]))
        else:
            frame = pd.json_normalize(result.model_dump(mode="json"))
        return frame.to_csv(index=False)

    if isinstance(result, list):
        payload = [row.model_dump(mode="json") for row in result]
    else:
        payload = result.model_dump(mode="json")
    return json.dumps(payload, indent=indent) + "\n"


def parse_and_dispatch(argv: Sequence[str] | None = None, cli_config: CLIConfig | None = None) -> int:
    cli_config = cli_config or CLIConfig()
    parser = create_parser(cli_config)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INVALID

    configure_logging(args.verbose)
    try:
        config = _load_lab_config(args)
        result = args.handler(args, config)
    except ResourceLimitError as e:
        logger.error("[ERROR] resource limit: %s", e)
        return EXIT_RESOURCE_LIMIT
    except (InvalidArgumentError, ValidationError, json.JSONDecodeError, OSError) as e:
        logger.error("[ERROR] %s", e)
        return EXIT_INVALID

    sys.stdout.write(render(result, args.format, cli_config.indent))
    return EXIT_OK
