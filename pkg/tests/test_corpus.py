"""The embedded corpus, plus negative fixtures for the corrected records."""

import pytest

from semigroup_pm.cli import _check_record
from semigroup_pm.corpus import (
    EXAMPLES,
    SECTION_TWO_EXAMPLE,
    record_from_json,
    record_to_json,
)
from semigroup_pm.linalg import IntMatrix, rank
from semigroup_pm.principal import all_principal_matrices, is_principal
from semigroup_pm.semigroup import GeneratorVector


def test_corpus_has_fourteen_records():
    assert len(EXAMPLES) == 14


@pytest.mark.parametrize("rec", EXAMPLES, ids=[r.name for r in EXAMPLES])
def test_record_passes(rec):
    assert _check_record(rec, cap=10000) == []


def test_two_matrix_phenomenon_record():
    assert _check_record(SECTION_TWO_EXAMPLE, cap=10000) == []


def test_record_json_roundtrip():
    for rec in EXAMPLES:
        assert record_from_json(record_to_json(rec)) == rec


def test_perturbed_record_fails():
    obj = record_to_json(EXAMPLES[1])  # the rank-2 concatenation example
    obj["expected_ranks"] = [4]
    broken = record_from_json(obj)
    failures = _check_record(broken, cap=10000)
    assert failures and "ed4-ex2" in failures[0]


class TestPrintedGeneratorErrata:
    """The uncorrected generator lists from two of the sources.

    In both cases a cross-block relation makes one displayed diagonal
    entry non-minimal, so the displayed matrix is pseudo principal for the
    printed generators but not principal.  The corpus records use the
    corrected scales (see their provenance); these tests pin down why.
    """

    def test_case_2_1_1_2_printed_generators(self):
        printed = (10, 15, 14, 21, 18, 27)
        displayed = IntMatrix.from_rows(
            [
                [-3, 2, 0, 0, 0, 0],
                [3, -2, 0, 0, 0, 0],
                [1, 0, -2, 0, 1, 0],
                [0, 1, 0, -2, 0, 1],
                [0, 0, 0, 0, -3, 2],
                [0, 0, 0, 0, 3, -2],
            ]
        )
        assert all(x == 0 for x in displayed.mul_vector(printed))
        report = is_principal(displayed, printed)
        # 2*18 = 15 + 21 makes the fifth diagonal entry -2, not -3
        assert not report
        assert report.row == 5 and report.true_exponent == 2

    def test_case_3_3_printed_generators(self):
        printed = (50, 60, 70, 55, 66, 77)
        displayed = IntMatrix.from_rows(
            [
                [-4, 1, 2, 0, 0, 0],
                [1, -2, 1, 0, 0, 0],
                [3, 1, -3, 0, 0, 0],
                [0, 0, 0, -4, 1, 2],
                [0, 0, 0, 1, -2, 1],
                [0, 0, 0, 3, 1, -3],
            ]
        )
        assert all(x == 0 for x in displayed.mul_vector(printed))
        report = is_principal(displayed, printed)
        # 2*55 = 50 + 60 makes the fourth diagonal entry -2, not -4
        assert not report
        assert report.row == 4 and report.true_exponent == 2

    def test_case_4_2_note_semigroup_has_no_rank_4_matrix(self):
        gens = GeneratorVector.of(35, 42, 49, 63, 45, 54)
        ranks = {rank(pm.matrix) for pm in all_principal_matrices(gens)}
        assert ranks == {5}

    def test_duplicated_display_belongs_to_4_2_generators(self):
        # the stray first display under case 2+3+1 is exactly the rank-4
        # matrix of the 4+2 example's generators
        stray = IntMatrix.from_rows(
            [
                [-3, 1, 0, 1, 0, 0],
                [1, -2, 1, 0, 0, 0],
                [1, 0, -2, 1, 0, 0],
                [1, 1, 1, -2, 0, 0],
                [0, 0, 0, 0, -3, 2],
                [0, 0, 0, 0, 3, -2],
            ]
        )
        assert is_principal(stray, (35, 42, 49, 63, 36, 54))
        with pytest.raises(ValueError, match="annihilate"):
            is_principal(stray, (26, 39, 35, 42, 49, 43))
