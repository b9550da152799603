import csv

import pytest

from coxeter2d.core.exceptions import InvalidInputError, ResourceLimitError
from coxeter2d.coxeter.models import GeneratorSubset, TwoDimCoxeterSystem
from coxeter2d.coxeter.services import a2n
from coxeter2d.fp_group.models import Word
from coxeter2d.fp_group.services import (
    coset_enumerate,
    dump_table_csv,
    group_order,
    subgroup_index,
    verify_coset_reps,
)


def _dihedral(m):
    return TwoDimCoxeterSystem(generators=("a", "b"), f={frozenset("ab"): m})


def test_word_parse_and_str():
    assert Word.parse("e") == Word()
    assert Word.parse("") == Word()
    assert Word.parse("y2 x2,y1") == Word.of("y2", "x2", "y1")
    assert str(Word()) == "e"
    assert str(Word.of("y2", "x2")) == "y2 x2"


def test_word_algebra():
    w = Word.of("a", "b")
    assert w * Word.of("c") == Word.of("a", "b", "c")
    assert w ** 2 == Word.of("a", "b", "a", "b")
    assert w ** 0 == Word()
    assert w.reversed() == Word.of("b", "a")
    with pytest.raises(InvalidInputError):
        w ** -1


def test_word_alphabet_check():
    with pytest.raises(InvalidInputError):
        Word.of("a", "z").check_alphabet(("a", "b"))


@pytest.mark.parametrize("m, order", [(2, 4), (3, 6), (4, 8), (6, 12)])
def test_dihedral_orders(m, order):
    assert group_order(_dihedral(m)) == order


def test_empty_system_is_trivial():
    assert group_order(TwoDimCoxeterSystem.empty()) == 1


def test_a21_is_symmetric_group_of_degree_three():
    assert group_order(a2n(1)) == 6


def test_a22_is_gl3(a2):
    assert group_order(a2) == 168


def test_subgroup_index():
    assert subgroup_index(a2n(1), GeneratorSubset.of("x1")) == 3
    assert subgroup_index(_dihedral(4), GeneratorSubset.of("a")) == 4
    assert subgroup_index(_dihedral(4), GeneratorSubset.of("a", "b")) == 1


def test_table_is_standardised():
    table = coset_enumerate(a2n(1), [Word.of("x1")])
    assert table.num_cosets == 3
    assert table.image(0, "x1") == 0
    assert table.image(0, "y1") == 1


@pytest.mark.parametrize(
    "system, subgroup, cosets",
    [
        (a2n(1), [Word.of("x1")], 3),
        (a2n(2), [], 168),
        (_dihedral(6), [Word.of("a")], 6),
    ],
)
def test_completed_table_columns_are_involutions(system, subgroup, cosets):
    table = coset_enumerate(system, subgroup)
    assert table.num_cosets == cosets
    for coset, row in enumerate(table.action):
        for column, image in enumerate(row):
            assert table.action[image][column] == coset


def test_trace():
    table = coset_enumerate(_dihedral(3), [])
    assert table.trace(Word()) == 0
    assert table.trace(Word.of("a", "a")) == 0
    assert table.trace(Word.of("a", "b", "a")) == table.trace(Word.of("b", "a", "b"))


def test_enumeration_is_deterministic(a2):
    first = coset_enumerate(a2, [Word.of("x1")])
    second = coset_enumerate(a2, [Word.of("x1")])
    assert first.action == second.action


def test_coset_limit(a2):
    with pytest.raises(ResourceLimitError):
        group_order(a2, max_cosets=10)


def test_subgroup_word_outside_alphabet():
    with pytest.raises(InvalidInputError):
        coset_enumerate(a2n(1), [Word.of("x2")])


def test_verify_coset_reps():
    reps = [Word(), Word.of("b"), Word.of("b", "a"), Word.of("b", "a", "b")]
    report = verify_coset_reps(_dihedral(4), GeneratorSubset.of("a"), reps)
    assert report.ok
    assert report.count == report.index == 4
    assert sorted(report.landed) == [0, 1, 2, 3]


def test_verify_coset_reps_detects_repeats():
    reps = [Word(), Word.of("a")]
    report = verify_coset_reps(_dihedral(4), GeneratorSubset.of("a"), reps)
    assert not report.distinct
    assert not report.covering
    assert not report.ok


def test_verify_coset_reps_needs_words():
    with pytest.raises(InvalidInputError):
        verify_coset_reps(_dihedral(4), GeneratorSubset.of("a"), [])


def test_dump_table_csv(tmp_path):
    path = tmp_path / "table.csv"
    table = coset_enumerate(a2n(1), [Word.of("x1")])
    dump_table_csv(table, str(path))
    with open(path, newline="") as handle:
        rows = list(csv.reader(handle))
    assert rows[0] == ["coset", "generator", "image"]
    assert len(rows) == 1 + 3 * 2
    assert rows[1] == ["0", "x1", "0"]
