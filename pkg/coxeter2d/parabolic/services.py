# coxeter2d/parabolic/services.py
import logging
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, List, Optional, Tuple

from coxeter2d.core import config
from coxeter2d.core.exceptions import HypothesisError, InvalidInputError, ResourceLimitError
from coxeter2d.coxeter.models import generator_name
from coxeter2d.coxeter.services import generator_subset, presentation_system
from coxeter2d.fp_group.models import Word
from coxeter2d.fp_group.services import group_order, subgroup_index, verify_coset_reps
from coxeter2d.gf2.models import GF2Matrix
from coxeter2d.gf2.services import gl_order, is_invertible
from coxeter2d.matrix_group.services import closure, phi
from coxeter2d.parabolic.models import Decomposition
from coxeter2d.parabolic.schemas import (
    CosetsOut,
    OrdersOut,
    VerificationOptions,
    VerificationReport,
)

logger = logging.getLogger(__name__)

CASE_FULL_LAST = "1 < mu_m <= lambda_l"
CASE_UNIT_LAMBDA = "lambda_l = 1"


def _require_same_total(lam: Decomposition, mu: Decomposition) -> int:
    if lam.total != mu.total:
        raise InvalidInputError(f"decompositions {lam} and {mu} have different totals")
    return lam.total


def compositions(total: int) -> List[Decomposition]:
    """All decompositions of ``total``, lexicographic in their parts."""
    if total < 1:
        raise InvalidInputError(f"total must be positive, got {total}")

    def build(rest: int) -> Iterator[Tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(1, rest + 1):
            for tail in build(rest - first):
                yield (first,) + tail

    return [Decomposition(parts) for parts in build(total)]


# -- membership and brute force ----------------------------------------------

def allowed_pattern(lam: Decomposition, mu: Decomposition) -> Tuple[int, ...]:
    """
    Per-row bitmask of positions that may be non-zero in P_λ ∩ P_μ^t:
    block upper triangular for λ, block lower triangular for μ.
    """
    size = _require_same_total(lam, mu)
    lam_block = [lam.block_of(i) for i in range(size)]
    mu_block = [mu.block_of(i) for i in range(size)]
    rows = []
    for i in range(size):
        mask = 0
        for j in range(size):
            if lam_block[i] <= lam_block[j] and mu_block[i] >= mu_block[j]:
                mask |= 1 << j
        rows.append(mask)
    return tuple(rows)


def parabolic_member(m: GF2Matrix, lam: Decomposition, mu: Decomposition) -> bool:
    size = _require_same_total(lam, mu)
    if m.n != size:
        raise InvalidInputError(f"matrix of dimension {m.n} tested against total {size}")
    pattern = allowed_pattern(lam, mu)
    if any(row & ~mask for row, mask in zip(m.rows, pattern)):
        return False
    return is_invertible(m)


def _submasks(mask: int) -> List[int]:
    subs = []
    sub = mask
    while True:
        subs.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & mask
    return sorted(subs)


def parabolic_elements(
    lam: Decomposition, mu: Decomposition, enumeration_cap: Optional[int] = None
) -> List[GF2Matrix]:
    """
    Every element of P_{λ|μ}. Only matrices supported on the allowed
    pattern are visited; all others fail membership anyway.
    """
    cap = enumeration_cap or config.ENUMERATION_CAP
    size = _require_same_total(lam, mu)
    if size > cap:
        raise ResourceLimitError(
            f"brute force over {size}x{size} matrices exceeds the enumeration cap {cap}"
        )
    per_row = [_submasks(mask) for mask in allowed_pattern(lam, mu)]
    members = []
    for rows in product(*per_row):
        matrix = GF2Matrix._trusted(size, rows)
        if is_invertible(matrix):
            members.append(matrix)
    return members


def order_bruteforce(
    lam: Decomposition, mu: Decomposition, enumeration_cap: Optional[int] = None
) -> int:
    return len(parabolic_elements(lam, mu, enumeration_cap))


# -- recursive order ------------------------------------------------------------

@lru_cache(maxsize=None)
def _order_canonical(lam: Tuple[int, ...], mu: Tuple[int, ...]) -> int:
    if not lam:
        return 1
    m, l = mu[-1], lam[-1]
    shrunk = lam[:-1] + (l - m,) if l > m else lam[:-1]
    return 2 ** (m * (l - m)) * gl_order(m) * _order(shrunk, mu[:-1])


def _order(lam: Tuple[int, ...], mu: Tuple[int, ...]) -> int:
    if lam and mu[-1] > lam[-1]:
        lam, mu = mu, lam
    return _order_canonical(lam, mu)


def order_recursive(lam: Decomposition, mu: Decomposition) -> int:
    """
    |P_{λ|μ}| = 2^{μ_m(λ_l-μ_m)} |GL_{μ_m}| |P_{λ~|μ~}| after swapping so
    that μ_m <= λ_l.
    """
    _require_same_total(lam, mu)
    return _order(lam.parts, mu.parts)


def levi_order(lam: Decomposition) -> int:
    return order_recursive(lam, lam)


# -- coset representatives ---------------------------------------------------------

def index_formula(lam: Decomposition, mu: Decomposition) -> Tuple[str, int]:
    """
    [P_{λ|μ} : P_{λ|μ'}] from the closed formula for its case, with the case name.
    """
    _require_same_total(lam, mu)
    m, l = mu.last, lam.last
    if m >= 2 and m <= l:
        return CASE_FULL_LAST, 2 ** m - 1
    if m >= 2 and l == 1:
        return CASE_UNIT_LAMBDA, 2 ** (m - 1)
    if m == 1:
        hint = "mu_m = 1 has no refinement mu'"
        if l == 1:
            hint += "; with lambda_l = mu_m = 1 the order equals that of the stripped pair"
    else:
        hint = f"lambda_l = {l} lies strictly between 1 and mu_m = {m}; swap lambda and mu"
    raise HypothesisError(
        f"no coset proposition applies to lambda=({lam}), mu=({mu}): needs mu_m >= 2 and "
        f"either {CASE_FULL_LAST} or {CASE_UNIT_LAMBDA} ({hint})"
    )


def coset_rep_words(lam: Decomposition, mu: Decomposition) -> List[Word]:
    """
    Representatives of ⟨S_{λ|μ'}⟩ in ⟨S_{λ|μ}⟩, the empty word first.

    1 < μ_m <= λ_l: y_n x_n^{e_n} ... y_k x_k^{e_k}, n-μ_m+2 <= k <= n.
    λ_l = 1:        y_n y_{n-1} ... y_l y_{j_1} ... y_{j_s}, l < j_1 < ... < j_s <= n.
    """
    case, _ = index_formula(lam, mu)
    n = lam.total - 1
    low = n - mu.last + 2
    words = [Word()]
    if case == CASE_FULL_LAST:
        for k in range(n, low - 1, -1):
            for exponents in product((0, 1), repeat=n - k + 1):
                letters = []
                for index, exponent in zip(range(n, k - 1, -1), exponents):
                    letters.append(generator_name("y", index))
                    if exponent:
                        letters.append(generator_name("x", index))
                words.append(Word(tuple(letters)))
    else:
        for start in range(n, low - 1, -1):
            descent = [generator_name("y", index) for index in range(n, start - 1, -1)]
            tail_range = range(start + 1, n + 1)
            for size in range(len(tail_range) + 1):
                for tail in combinations(tail_range, size):
                    words.append(Word(tuple(descent + [generator_name("y", j) for j in tail])))
    return words


def presentation_index(
    lam: Decomposition, mu: Decomposition, max_cosets: Optional[int] = None
) -> int:
    """[⟨S_{λ|μ}⟩ : ⟨S_{λ|μ'}⟩] by relative coset enumeration."""
    system = presentation_system(lam, mu)
    return subgroup_index(system, generator_subset(lam, mu.refine_last()), max_cosets)


def verify_cosets(
    lam: Decomposition, mu: Decomposition, max_cosets: Optional[int] = None
) -> CosetsOut:
    case, expected = index_formula(lam, mu)
    words = coset_rep_words(lam, mu)
    system = presentation_system(lam, mu)
    report = verify_coset_reps(
        system, generator_subset(lam, mu.refine_last()), words, max_cosets
    )
    return CosetsOut(
        lambda_=list(lam.parts),
        mu=list(mu.parts),
        case=case,
        expected_index=expected,
        representatives=[str(word) for word in words],
        distinct=report.distinct,
        covering=report.covering,
        count=report.count,
        index=report.index,
    )


# -- verification ---------------------------------------------------------------

def phi_generators(lam: Decomposition, mu: Decomposition) -> List[GF2Matrix]:
    system = presentation_system(lam, mu)
    n = lam.total - 1
    return [phi(gen, n) for gen in system.generators]


class TheoremVerifier:
    """
    Compares |P_{λ|μ}| computed four ways and checks that φ(S_{λ|μ})
    generates exactly P_{λ|μ}.
    """

    def __init__(self, options: Optional[VerificationOptions] = None):
        self.options = options or VerificationOptions()

    def verify(self, lam: Decomposition, mu: Decomposition) -> VerificationReport:
        size = _require_same_total(lam, mu)
        opts = self.options
        orders = OrdersOut(recursive=order_recursive(lam, mu))
        image_check = None
        skipped: List[str] = []

        members = None
        if (opts.run_bruteforce or opts.run_image) and size <= opts.enumeration_cap:
            members = parabolic_elements(lam, mu, opts.enumeration_cap)
            if opts.run_bruteforce:
                orders.bruteforce = len(members)
        elif opts.run_bruteforce:
            skipped.append(f"brute force skipped: total {size} exceeds cap {opts.enumeration_cap}")

        if opts.run_presentation:
            try:
                orders.presentation = group_order(presentation_system(lam, mu), opts.max_cosets)
            except ResourceLimitError as exc:
                skipped.append(exc.detail)

        if opts.run_image:
            try:
                image = closure(phi_generators(lam, mu), opts.element_limit, dimension=size)
            except ResourceLimitError as exc:
                skipped.append(exc.detail)
            else:
                orders.closure = image.order
                if members is not None:
                    image_check = image.element_set() == frozenset(members)
                else:
                    inside = all(parabolic_member(m, lam, mu) for m in image)
                    image_check = inside and image.order == orders.recursive

        computed = orders.computed()
        agree = all(value == computed[0] for value in computed)
        if not agree or image_check is False:
            verdict, reason = "fail", "orders disagree" if not agree else "image differs from P"
        elif skipped:
            verdict, reason = "skipped", "; ".join(skipped)
        else:
            verdict, reason = "pass", None
        logger.info("lambda=(%s) mu=(%s): %s", lam, mu, verdict)
        return VerificationReport(
            lambda_=list(lam.parts),
            mu=list(mu.parts),
            orders=orders,
            image_check=image_check,
            verdict=verdict,
            reason=reason,
        )

    def pairs(self, total: int) -> List[Tuple[Decomposition, Decomposition]]:
        parts = compositions(total)
        return [(lam, mu) for lam in parts for mu in parts]

    def sweep(self, total: int, workers: int = 1) -> List[VerificationReport]:
        """One report per ordered pair, in composition order, whatever ``workers`` is."""
        pairs = self.pairs(total)
        if workers <= 1:
            return [self.verify(lam, mu) for lam, mu in pairs]
        jobs = [(self.options, lam, mu) for lam, mu in pairs]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_verify_job, jobs))


def _verify_job(job: Tuple[VerificationOptions, Decomposition, Decomposition]) -> VerificationReport:
    options, lam, mu = job
    return TheoremVerifier(options).verify(lam, mu)


def verify_theorem(
    lam: Decomposition, mu: Decomposition, options: Optional[VerificationOptions] = None
) -> VerificationReport:
    return TheoremVerifier(options).verify(lam, mu)
