import argparse
import sys
from typing import List, Optional

from dotenv import find_dotenv, load_dotenv

from modules.cli.commands import COMMANDS
from modules.config.settings import AnalysisConfig
from modules.configs import BUILTIN_REGISTRY
from modules.configs.builtins import PARAMETER_SETS
from modules.cli.functions import FIELDS
from modules.custom_errors import (
    ConfigParseError,
    ConfigurationError,
    LineGroupoidError,
    UnknownBuiltinError,
    UsageError,
)
from modules.utils.logging import BaseLogger

EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_PRECONDITION = 4


def _add_shared(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--builtin", metavar="NAME",
                        help=f"Built-in configuration: {', '.join(BUILTIN_REGISTRY)}")
    parser.add_argument("--config", metavar="PATH", help="JSON configuration document")
    parser.add_argument("--base", type=int, help="Base line for the vertex group")
    parser.add_argument("--cap", type=int, help="Closure cap (default: the field's soundness cap)")
    parser.add_argument("--json", action="store_true", help="Print a structured JSON report")
    parser.add_argument("--elements", action="store_true", help="List group elements at any order")


# --- PARSER FACTORY ---
def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="line-groupoids",
        description="Projection groupoids of line configurations over number fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="Connectivity and vertex groups of a configuration")
    _add_shared(analyze)

    orbit = sub.add_parser("orbit", help="Orbit of a point under all simple morphisms")
    _add_shared(orbit)
    orbit.add_argument("--line", type=int, help="Line carrying the start point")
    orbit.add_argument("--point", help="Start parameter 'a,b', entries in the field generator")

    stab = sub.add_parser("stabilizer", help="Setwise stabilizer of points of P^1")
    _add_shared(stab)
    stab.add_argument("--points", help="'a,b;c,d;...' or a JSON file of coefficient pairs")
    stab.add_argument("--set", choices=sorted(PARAMETER_SETS), help="Named marked parameter set")
    stab.add_argument("--field", default="eisenstein", choices=sorted(FIELDS),
                      help="Field of inline points")

    verify = sub.add_parser("verify", help="Run the full verification suite")
    _add_shared(verify)
    verify.add_argument("--only", help="Comma-separated criterion numbers")
    verify.add_argument("--corrupt", metavar="BUILTIN", help="Perturb a built-in before checking (test mode)")
    return parser


def settings_from_args(args: argparse.Namespace) -> AnalysisConfig:
    settings = AnalysisConfig.from_env()
    if args.cap is not None:
        settings.closure.cap = args.cap
    settings.output.force_elements = args.elements
    settings.output.json = args.json
    try:
        settings.validate()
    except ConfigurationError as e:
        raise UsageError(str(e))
    return settings


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv(find_dotenv(usecwd=True))
    parser = create_parser()
    args = parser.parse_args(argv)
    debug = False
    try:
        settings = settings_from_args(args)
        debug = settings.debug_mode
        BaseLogger.set_level(settings.log_level)
        handler, render = COMMANDS[args.command]
        report, code = handler(args, settings)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ConfigParseError, UnknownBuiltinError) as e:
        print(f"Parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except LineGroupoidError as e:
        if debug:
            BaseLogger.log_error(e, args.command)
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION

    if args.json:
        print(report.model_dump_json(indent=2))
    else:
        print(render(report))
    return code
