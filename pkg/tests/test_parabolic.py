import pytest

from coxeter2d.core.exceptions import HypothesisError, InvalidInputError, ResourceLimitError
from coxeter2d.gf2.services import elementary, identity
from coxeter2d.matrix_group.services import phi
from coxeter2d.parabolic.models import Decomposition
from coxeter2d.parabolic.schemas import VerificationOptions
from coxeter2d.parabolic.services import (
    CASE_FULL_LAST,
    CASE_UNIT_LAMBDA,
    TheoremVerifier,
    allowed_pattern,
    compositions,
    coset_rep_words,
    index_formula,
    levi_order,
    order_bruteforce,
    order_recursive,
    parabolic_elements,
    parabolic_member,
    presentation_index,
    verify_cosets,
    verify_theorem,
)


# Decomposition

def test_parse_and_str(dec):
    lam = dec("2, 1,1")
    assert lam.parts == (2, 1, 1)
    assert str(lam) == "2,1,1"
    assert lam.total == 4
    assert lam.length == 3
    assert lam.last == 1


@pytest.mark.parametrize("text", ["", "2,,1", "a", "0,3", "-1,2", "2,"])
def test_parse_rejects(text):
    with pytest.raises(InvalidInputError):
        Decomposition.parse(text)


def test_stopovers(dec):
    assert dec("2,1,1").stopovers == frozenset({2, 3})
    assert dec("3").stopovers == frozenset()


def test_last_part_helpers(dec):
    mu = dec("1,3")
    assert mu.without_last() == (1,)
    assert mu.shrink_last(2) == (1, 1)
    assert mu.shrink_last(3) == (1,)
    assert mu.refine_last() == dec("1,2,1")
    with pytest.raises(InvalidInputError):
        dec("2,1").refine_last()
    with pytest.raises(InvalidInputError):
        mu.shrink_last(4)


def test_block_of(dec):
    lam = dec("2,1")
    assert [lam.block_of(i) for i in range(3)] == [0, 0, 1]
    with pytest.raises(InvalidInputError):
        lam.block_of(3)


def test_compositions():
    assert [str(c) for c in compositions(3)] == ["1,1,1", "1,2", "2,1", "3"]
    assert len(compositions(4)) == 8
    with pytest.raises(InvalidInputError):
        compositions(0)


# Membership and brute force

def test_allowed_pattern(dec):
    assert allowed_pattern(dec("2,1"), dec("3")) == (0b111, 0b111, 0b100)
    # Borel: upper triangular
    assert allowed_pattern(dec("1,1,1"), dec("3")) == (0b111, 0b110, 0b100)


def test_parabolic_member(dec):
    lam, mu = dec("2,1"), dec("3")
    assert parabolic_member(identity(3), lam, mu)
    assert parabolic_member(elementary(3, 2, 1), lam, mu)
    assert not parabolic_member(elementary(3, 3, 1), lam, mu)
    with pytest.raises(InvalidInputError):
        parabolic_member(identity(2), lam, mu)


def test_parabolic_elements_of_gl2(dec):
    members = parabolic_elements(dec("2"), dec("2"))
    assert len(members) == 6
    assert len(set(members)) == 6


def test_bruteforce_cap(dec):
    with pytest.raises(ResourceLimitError):
        order_bruteforce(dec("5"), dec("5"), enumeration_cap=4)


def test_orders_need_equal_totals(dec):
    with pytest.raises(InvalidInputError):
        order_recursive(dec("2"), dec("3"))


# Recursive order

@pytest.mark.parametrize(
    "lam, mu, order",
    [
        ("1", "1", 1),
        ("1,1", "1,1", 1),
        ("2", "2", 6),
        ("3", "3", 168),
        ("2,1", "3", 24),
        ("3", "2,1", 24),
        ("1,1,1", "3", 8),
        ("1,2", "2,1", 4),
        ("4", "4", 20160),
        ("2,2", "2,2", 36),
    ],
)
def test_order_recursive(dec, lam, mu, order):
    assert order_recursive(dec(lam), dec(mu)) == order


@pytest.mark.parametrize("total", [1, 2, 3, 4])
def test_recursion_matches_bruteforce(total):
    parts = compositions(total)
    for lam in parts:
        for mu in parts:
            assert order_recursive(lam, mu) == order_bruteforce(lam, mu), (str(lam), str(mu))


def test_levi_order(dec):
    assert levi_order(dec("2,1")) == 6
    assert levi_order(dec("1,1,1")) == 1
    assert levi_order(dec("2,2")) == 36


# Coset representatives

@pytest.mark.parametrize(
    "lam, mu, case, index",
    [
        ("3", "3", CASE_FULL_LAST, 7),
        ("2,2", "2,2", CASE_FULL_LAST, 3),
        ("1,1,1", "3", CASE_UNIT_LAMBDA, 4),
        ("2,1", "3", CASE_UNIT_LAMBDA, 4),
    ],
)
def test_index_formula(dec, lam, mu, case, index):
    assert index_formula(dec(lam), dec(mu)) == (case, index)


def test_index_formula_without_refinement(dec):
    with pytest.raises(HypothesisError, match="mu_m = 1"):
        index_formula(dec("1,1"), dec("1,1"))


def test_index_formula_between_cases(dec):
    with pytest.raises(HypothesisError, match="swap"):
        index_formula(dec("1,2"), dec("3"))


def test_coset_rep_words_full_last_part(dec):
    words = [str(w) for w in coset_rep_words(dec("3"), dec("3"))]
    assert words == [
        "e",
        "y2",
        "y2 x2",
        "y2 y1",
        "y2 y1 x1",
        "y2 x2 y1",
        "y2 x2 y1 x1",
    ]


def test_coset_rep_words_unit_lambda(dec):
    words = [str(w) for w in coset_rep_words(dec("1,1,1"), dec("3"))]
    assert words == ["e", "y2", "y2 y1", "y2 y1 y2"]


@pytest.mark.parametrize(
    "lam, mu",
    [("3", "3"), ("2,2", "2,2"), ("1,1,1", "3"), ("2,1", "3"), ("1,3", "1,3"), ("1,1,1,1", "4")],
)
def test_representatives_are_a_transversal(dec, lam, mu):
    report = verify_cosets(dec(lam), dec(mu))
    assert report.distinct
    assert report.covering
    assert report.count == report.index == report.expected_index


def test_presentation_index(dec):
    assert presentation_index(dec("3"), dec("3")) == 7
    assert presentation_index(dec("1,1,1"), dec("3")) == 4


def test_cosets_document(dec):
    doc = verify_cosets(dec("1,1,1"), dec("3")).to_document()
    assert doc["lambda"] == [1, 1, 1]
    assert doc["case"] == CASE_UNIT_LAMBDA
    assert doc["representatives"][0] == "e"


# Verification

def test_verify_borel(dec):
    report = verify_theorem(dec("1,1,1"), dec("3"))
    assert report.passed
    assert report.image_check is True
    assert report.orders.computed() == [8, 8, 8, 8]


def test_verify_total_one(dec):
    report = verify_theorem(dec("1"), dec("1"))
    assert report.passed
    assert report.orders.computed() == [1, 1, 1, 1]


def test_verify_skips_bruteforce_beyond_cap(dec):
    options = VerificationOptions(enumeration_cap=2)
    report = verify_theorem(dec("3"), dec("3"), options)
    assert report.verdict == "skipped"
    assert "brute force" in report.reason
    assert report.orders.bruteforce is None
    assert report.orders.closure == 168
    assert report.image_check is True


def test_verify_with_checks_disabled(dec):
    options = VerificationOptions(run_presentation=False, run_bruteforce=False, run_image=False)
    report = verify_theorem(dec("2,1"), dec("1,2"), options)
    assert report.passed
    assert report.orders.computed() == [report.orders.recursive]


def test_verify_reports_resource_limits_as_skipped(dec):
    options = VerificationOptions(max_cosets=20, run_image=False)
    report = verify_theorem(dec("3"), dec("3"), options)
    assert report.verdict == "skipped"
    assert report.orders.presentation is None


def test_report_document_uses_lambda_key(dec):
    doc = verify_theorem(dec("2"), dec("1,1")).to_document()
    assert doc["lambda"] == [2]
    assert doc["mu"] == [1, 1]
    assert doc["verdict"] == "pass"
    assert "reason" not in doc


def test_options_reject_non_positive_limits():
    with pytest.raises(ValueError):
        VerificationOptions(max_cosets=0)


def test_sweep_order_and_count():
    reports = TheoremVerifier().sweep(2)
    pairs = [(r.lambda_, r.mu) for r in reports]
    assert pairs == [
        ([1, 1], [1, 1]),
        ([1, 1], [2]),
        ([2], [1, 1]),
        ([2], [2]),
    ]
    assert all(r.passed for r in reports)


def test_sweep_with_workers_matches_serial():
    verifier = TheoremVerifier()
    assert verifier.sweep(2, workers=2) == verifier.sweep(2)


@pytest.mark.parametrize("total", [2, 3, 4, 5, 6])
def test_phi_of_x_lies_in_p_lambda_exactly_off_stopovers(total):
    whole = Decomposition((total,))
    n = total - 1
    for lam in compositions(total):
        for j in range(1, n + 1):
            inside = parabolic_member(phi(f"x{j}", n), lam, whole)
            assert inside == (j not in lam.stopovers), (str(lam), j)


@pytest.mark.parametrize("total", [3, 4])
def test_stripping_a_common_unit_part(total):
    for lam in compositions(total):
        for mu in compositions(total):
            if lam.last == mu.last == 1:
                stripped = Decomposition(lam.without_last()), Decomposition(mu.without_last())
                assert order_bruteforce(lam, mu) == order_bruteforce(*stripped)


@pytest.mark.parametrize("total", [2, 3, 4])
def test_index_formula_matches_bruteforce_ratio(total):
    for lam in compositions(total):
        for mu in compositions(total):
            try:
                _, index = index_formula(lam, mu)
            except HypothesisError:
                continue
            whole = order_bruteforce(lam, mu)
            part = order_bruteforce(lam, mu.refine_last())
            assert whole == index * part, (str(lam), str(mu))
