"""Command-line entry point: enumerate, verify and transition."""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from common.config import get_settings
from common.enums import Command, OutputFormat, VerifySuite
from services.cli.commands import cmd_enumerate, cmd_transition, cmd_verify
from services.cli.schemas import JobConfig

logger = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

COMMANDS = {
    Command.ENUMERATE: cmd_enumerate,
    Command.VERIFY: cmd_verify,
    Command.TRANSITION: cmd_transition,
}


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog="paraboson",
        description="Exact computations in the paraboson Fock space L(p) of osp(1|2n)",
    )
    parser.add_argument("--log-level", default=settings.log_level, help="logging level (default from PARABOSON_LOG_LEVEL)")
    commands = parser.add_subparsers(dest="command", required=True)

    def add_common(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--n", type=int, required=True, help="rank n of osp(1|2n)")
        sub.add_argument("--p", type=int, required=True, help="paraboson order p")
        sub.add_argument("--deg", type=int, default=2, help="degree (enumerate) or degree bound (verify)")
        sub.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value)
        sub.add_argument("--seed", type=int, default=settings.default_seed, help="seed for sampled checks")
        sub.add_argument("--out", help="write output to FILE instead of stdout")

    add_common(commands.add_parser(Command.ENUMERATE.value, help="list the PBW-type basis of one degree"))
    verify = commands.add_parser(Command.VERIFY.value, help="run a verification suite")
    add_common(verify)
    verify.add_argument("--suite", choices=[s.value for s in VerifySuite], default=VerifySuite.ALL.value)
    transition = commands.add_parser(Command.TRANSITION.value, help="transition matrices from the GZ basis")
    add_common(transition)
    transition.add_argument("--lambda", dest="shape", required=True, help='partition such as "4,2,0"')
    return parser


def config_from_args(args: argparse.Namespace) -> JobConfig:
    return JobConfig(
        command=Command(args.command),
        n=args.n,
        p=args.p,
        degree=args.deg,
        format=OutputFormat(args.format),
        suite=VerifySuite(getattr(args, "suite", VerifySuite.ALL.value)),
        shape=getattr(args, "shape", None),
        seed=args.seed,
        out=args.out,
    )


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_SUCCESS
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(name)s: %(message)s")

    try:
        config = config_from_args(args)
    except ValidationError as e:
        print(f"invalid arguments: {e}", file=sys.stderr)
        return EXIT_USAGE

    if config.command is Command.VERIFY:
        print(f"seed: {config.seed}", file=sys.stderr)
    result = COMMANDS[config.command](config)
    output = result.get("output", "")
    if config.out:
        with open(config.out, "w", encoding="utf-8") as handle:
            handle.write(output)
    elif output:
        sys.stdout.write(output)
    if result.get("message"):
        print(result["message"], file=sys.stderr)

    if result["status"] == "success":
        return EXIT_SUCCESS
    return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
