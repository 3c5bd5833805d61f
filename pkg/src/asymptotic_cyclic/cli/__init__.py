"""コマンドラインインターフェース"""

from asymptotic_cyclic.cli.commands import COMMANDS, EXIT_FAILED, EXIT_HYPOTHESIS, EXIT_INPUT, EXIT_PASSED, load_fredholm
from asymptotic_cyclic.cli.exceptions import CliError, InputSpecError, ReportWriteError
from asymptotic_cyclic.cli.models import RunConfig
from asymptotic_cyclic.cli.parser import UsageError, build_parser, run_config_from_args
from asymptotic_cyclic.cli.report import write_report

__all__ = [
    "COMMANDS",
    "EXIT_FAILED",
    "EXIT_HYPOTHESIS",
    "EXIT_INPUT",
    "EXIT_PASSED",
    "CliError",
    "InputSpecError",
    "ReportWriteError",
    "RunConfig",
    "UsageError",
    "build_parser",
    "load_fredholm",
    "run_config_from_args",
    "write_report",
]
