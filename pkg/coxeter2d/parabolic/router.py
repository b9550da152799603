# coxeter2d/parabolic/router.py
import argparse
import logging

from coxeter2d.core.exceptions import InvalidInputError
from coxeter2d.core.router import (
    LIMIT_ARGUMENTS,
    OUTPUT_ARGUMENTS,
    PAIR_ARGUMENTS,
    CommandRouter,
    arg,
    dump_json,
    emit,
)
from coxeter2d.coxeter.services import presentation_system
from coxeter2d.dependencies.decompositions import get_decomposition_pair
from coxeter2d.dependencies.run_config import get_run_config
from coxeter2d.fp_group.services import coset_enumerate, dump_table_csv
from coxeter2d.matrix_group.services import closure
from coxeter2d.parabolic.schemas import OrderReport, OrdersOut, VerificationReport
from coxeter2d.parabolic.services import (
    TheoremVerifier,
    order_bruteforce,
    order_recursive,
    phi_generators,
    verify_cosets,
)

logger = logging.getLogger(__name__)

router = CommandRouter(tags=["Parabolic"])

METHODS = ("recursion", "bruteforce", "presentation", "closure", "all")
EXIT_OK = 0
EXIT_DISAGREE = 2
EXIT_SKIPPED = 3


def _report_line(report: VerificationReport) -> str:
    lam = ",".join(map(str, report.lambda_))
    mu = ",".join(map(str, report.mu))
    orders = " ".join(f"{name}={value}" for name, value in report.orders.model_dump(exclude_none=True).items())
    line = f"lambda={lam} mu={mu} {orders} {report.verdict}"
    if report.reason:
        line += f" ({report.reason})"
    return line


# Orders of P_{λ|μ}
@router.command(
    "order",
    help="Compute |P_{lambda|mu}| by recursion, brute force, coset enumeration or matrix closure.",
    arguments=PAIR_ARGUMENTS + [
        arg("--method", choices=METHODS, default="all"),
        arg("--dump-table", default=None, metavar="PATH",
            help="write the presentation coset table as CSV"),
    ] + LIMIT_ARGUMENTS + OUTPUT_ARGUMENTS,
)
def cmd_order(args: argparse.Namespace) -> int:
    run = get_run_config(args)
    lam, mu = get_decomposition_pair(run)
    method = args.method
    wanted = set(METHODS[:-1]) if method == "all" else {method}
    if args.dump_table and "presentation" not in wanted:
        raise InvalidInputError("--dump-table needs --method presentation or all")

    orders = OrdersOut()
    if "recursion" in wanted:
        orders.recursive = order_recursive(lam, mu)
    if "bruteforce" in wanted:
        orders.bruteforce = order_bruteforce(lam, mu, run.enumeration_cap)
    if "presentation" in wanted:
        table = coset_enumerate(presentation_system(lam, mu), [], run.max_cosets)
        orders.presentation = table.num_cosets
        if args.dump_table:
            dump_table_csv(table, args.dump_table)
            logger.info("coset table written to %s", args.dump_table)
    if "closure" in wanted:
        image = closure(phi_generators(lam, mu), run.element_limit, dimension=lam.total)
        orders.closure = image.order

    computed = orders.computed()
    report = OrderReport(
        lambda_=list(lam.parts),
        mu=list(mu.parts),
        method=method,
        orders=orders,
        agree=all(value == computed[0] for value in computed),
    )
    if run.format == "text":
        values = " ".join(f"{name}={value}" for name, value in orders.model_dump(exclude_none=True).items())
        emit(f"lambda={lam} mu={mu} {values}", run.output)
    else:
        emit(dump_json(report.to_document()), run.output)
    return EXIT_OK if report.agree else EXIT_DISAGREE


# Isomorphism check for one pair or every pair of a total
@router.command(
    "verify",
    help="Check that the presentation, the matrix image and the recursion agree on P_{lambda|mu}.",
    arguments=PAIR_ARGUMENTS + [
        arg("--total", type=int, default=None, help="n+1 for --all-pairs"),
        arg("--all-pairs", action="store_true", help="sweep every ordered pair of decompositions"),
        arg("--no-presentation", action="store_true"),
        arg("--no-bruteforce", action="store_true"),
        arg("--no-image", action="store_true"),
        arg("--workers", type=int, default=None),
    ] + LIMIT_ARGUMENTS + OUTPUT_ARGUMENTS,
)
def cmd_verify(args: argparse.Namespace) -> int:
    run = get_run_config(args)
    verifier = TheoremVerifier(run.verification_options(
        run_presentation=not args.no_presentation,
        run_bruteforce=not args.no_bruteforce,
        run_image=not args.no_image,
    ))
    if args.all_pairs:
        if args.total is None:
            raise InvalidInputError("--all-pairs needs --total")
        if run.lambda_ is not None or run.mu is not None:
            raise InvalidInputError("--all-pairs cannot be combined with --lambda/--mu")
        reports = verifier.sweep(args.total, run.workers)
    else:
        if args.total is not None:
            raise InvalidInputError("--total is only meaningful with --all-pairs")
        lam, mu = get_decomposition_pair(run)
        reports = [verifier.verify(lam, mu)]

    if run.format == "text":
        emit("\n".join(_report_line(report) for report in reports), run.output)
    else:
        emit(dump_json([report.to_document() for report in reports]), run.output)

    verdicts = {report.verdict for report in reports}
    if "fail" in verdicts:
        return EXIT_DISAGREE
    if "skipped" in verdicts:
        return EXIT_SKIPPED
    return EXIT_OK


# Coset representatives of P_{λ|μ'} in P_{λ|μ}
@router.command(
    "cosets",
    help="List coset representatives of P_{lambda|mu'} in P_{lambda|mu} and check them.",
    arguments=PAIR_ARGUMENTS + [arg("--max-cosets", type=int, default=None)] + OUTPUT_ARGUMENTS,
)
def cmd_cosets(args: argparse.Namespace) -> int:
    run = get_run_config(args)
    lam, mu = get_decomposition_pair(run)
    report = verify_cosets(lam, mu, run.max_cosets)
    if run.format == "text":
        lines = [f"lambda={lam} mu={mu} case: {report.case} index={report.index}"]
        lines += [f"  {word}" for word in report.representatives]
        emit("\n".join(lines), run.output)
    else:
        emit(dump_json(report.to_document()), run.output)
    ok = report.distinct and report.covering and report.count == report.expected_index
    return EXIT_OK if ok else EXIT_DISAGREE
