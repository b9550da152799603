# coxeter2d/coxeter/router.py
import argparse

from coxeter2d.core.exceptions import InvalidInputError
from coxeter2d.core.router import PAIR_ARGUMENTS, CommandRouter, arg, emit
from coxeter2d.coxeter.models import GeneratorSubset
from coxeter2d.coxeter.services import DIAGRAM_FORMATS, a2n, export_diagram, presentation_system, restrict
from coxeter2d.dependencies.decompositions import get_decomposition_pair
from coxeter2d.dependencies.run_config import get_run_config

router = CommandRouter(tags=["Coxeter"])


@router.command(
    "diagram",
    help="Draw the labelled complex of A_2,n or of a subsystem as DOT or JSON.",
    arguments=[arg("--n", type=int, default=None, help="rank of A_2,n")]
    + PAIR_ARGUMENTS
    + [
        arg("--subset", default=None, help="comma separated generators, e.g. x1,y1,x2"),
        arg("--format", choices=DIAGRAM_FORMATS, default="dot"),
        arg("--output", default=None, metavar="PATH"),
    ],
)
def cmd_diagram(args: argparse.Namespace) -> int:
    run = get_run_config(args)
    by_pair = run.lambda_ is not None or run.mu is not None
    if by_pair and args.subset:
        raise InvalidInputError("use either --subset or --lambda/--mu, not both")

    if by_pair:
        lam, mu = get_decomposition_pair(run)
        if run.n is not None and run.n != lam.total - 1:
            raise InvalidInputError(f"--n {run.n} does not match n+1 = {lam.total}")
        system = presentation_system(lam, mu)
    else:
        if run.n is None:
            raise InvalidInputError("--n is required")
        system = a2n(run.n)
        if args.subset:
            names = [name.strip() for name in args.subset.split(",") if name.strip()]
            system = restrict(system, GeneratorSubset.of(*names))

    emit(export_diagram(system, run.format), run.output)
    return 0
