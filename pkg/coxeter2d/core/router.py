# coxeter2d/core/router.py
import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

from coxeter2d.core.exceptions import InvalidInputError

Argument = Tuple[Tuple[str, ...], dict]


def arg(*flags: str, **kwargs) -> Argument:
    return flags, kwargs


@dataclass
class Command:
    name: str
    help: str
    arguments: Sequence[Argument]
    handler: Callable[[argparse.Namespace], int]


@dataclass
class CommandRouter:
    """
    Collects subcommands the way an APIRouter collects endpoints.

    Usage:
        router = CommandRouter(tags=["Parabolic"])

        @router.command("order", help="...", arguments=[arg("--lambda", ...)])
        def cmd_order(args) -> int:
            ...
    """

    tags: List[str] = field(default_factory=list)
    commands: List[Command] = field(default_factory=list)

    def command(self, name: str, help: str, arguments: Sequence[Argument] = ()):
        def decorator(func):
            self.commands.append(Command(name, help, list(arguments), func))
            return func

        return decorator


class UsageParser(argparse.ArgumentParser):
    """Usage errors exit 64, leaving 2 free for verification disagreements."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise InvalidInputError(message)


def include_router(subparsers, router: CommandRouter) -> None:
    for command in router.commands:
        parser = subparsers.add_parser(command.name, help=command.help, description=command.help)
        for flags, kwargs in command.arguments:
            parser.add_argument(*flags, **kwargs)
        parser.set_defaults(handler=command.handler)


def emit(text: str, output: Optional[str] = None) -> None:
    """Write a document to ``output`` or stdout, newline terminated."""
    if not text.endswith("\n"):
        text += "\n"
    if output:
        with open(output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def dump_json(document) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False)


OUTPUT_ARGUMENTS = [
    arg("--output", default=None, metavar="PATH", help="write the document here instead of stdout"),
    arg("--format", choices=("json", "text"), default="json"),
]

LIMIT_ARGUMENTS = [
    arg("--max-cosets", type=int, default=None, help="coset enumeration ceiling"),
    arg("--element-limit", type=int, default=None, help="matrix closure ceiling"),
    arg("--enumeration-cap", type=int, default=None, help="largest n+1 brute-forced"),
]

PAIR_ARGUMENTS = [
    arg("--lambda", dest="lambda_", metavar="PARTS", help="decomposition such as 2,1"),
    arg("--mu", metavar="PARTS", help="decomposition with the same total"),
]
