# coxeter2d/main.py
import json
import sys
from typing import Optional, Sequence

from coxeter2d import __version__
from coxeter2d.core.exceptions import Coxeter2DError


def build_parser():
    # routers pull in core.config, which validates COXETER2D_* on import
    from coxeter2d.core.router import UsageParser, include_router
    from coxeter2d.coxeter.router import router as coxeter_router
    from coxeter2d.matrix_group.router import router as matrix_group_router
    from coxeter2d.parabolic.router import router as parabolic_router

    parser = UsageParser(
        prog="coxeter2d",
        description="Verify presentations of parabolic subgroups of GL_{n+1}(F_2) "
                    "by two-dimensional Coxeter systems",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="repeat for more detail")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=UsageParser)

    # Include routers
    include_router(subparsers, parabolic_router)
    include_router(subparsers, coxeter_router)
    include_router(subparsers, matrix_group_router)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        parser = build_parser()
        args = parser.parse_args(argv)

        from coxeter2d.core.logging import configure_logging

        configure_logging(args.verbose)
        return args.handler(args)
    except Coxeter2DError as exc:
        sys.stderr.write(json.dumps({"error": exc.detail}) + "\n")
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
