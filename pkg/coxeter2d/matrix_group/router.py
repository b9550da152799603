# coxeter2d/matrix_group/router.py
import argparse

from coxeter2d.core.exceptions import InvalidInputError
from coxeter2d.core.router import OUTPUT_ARGUMENTS, CommandRouter, arg, dump_json, emit
from coxeter2d.coxeter.services import a2n
from coxeter2d.dependencies.run_config import get_run_config
from coxeter2d.gf2.models import MAX_DIMENSION
from coxeter2d.matrix_group.services import check_homomorphism

router = CommandRouter(tags=["Matrix group"])


@router.command(
    "phi-check",
    help="Check that every relator of A_2,n maps to the identity of GL_{n+1}(F_2).",
    arguments=[arg("--n", type=int, required=True)] + OUTPUT_ARGUMENTS,
)
def cmd_phi_check(args: argparse.Namespace) -> int:
    run = get_run_config(args)
    if not 1 <= run.n <= MAX_DIMENSION - 1:
        raise InvalidInputError(f"--n must lie in [1, {MAX_DIMENSION - 1}], got {run.n}")
    report = check_homomorphism(a2n(run.n), run.n)
    if run.format == "text":
        status = "ok" if report.ok else f"relator {report.failing_relator} is not the identity"
        emit(f"n={report.n} relators={report.relators_checked} {status}", run.output)
    else:
        emit(dump_json(report.model_dump(exclude_none=True)), run.output)
    return 0 if report.ok else 2
