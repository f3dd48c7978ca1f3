import json
import random

import pytest

from semigroup_pm.cli import main
from semigroup_pm.corpus import EXAMPLES, record_to_json
from semigroup_pm.formats import (
    format_matrix_json,
    format_matrix_text,
    parse_matrix_json,
    parse_matrix_text,
)
from semigroup_pm.fuzz import run_fuzz
from semigroup_pm.linalg import IntMatrix

CERTIFIED_TEXT = "-4 1 1 1\n2 -4 1 1\n1 1 -3 1\n1 2 1 -3\n"
PSEUDO_TEXT = "-4 0 1 1\n1 -5 4 0\n0 4 -5 1\n3 1 0 -2\n"
DOUBLE_ZERO_TEXT = "-5 1 1 4\n4 -3 0 0\n1 1 -2 0\n0 1 1 -4\n"
RANK2_TEXT = "-7 4 0 0\n7 -4 0 0\n0 0 -8 3\n0 0 8 -3\n"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestFormats:
    def test_text_round_trip(self):
        m = parse_matrix_text(CERTIFIED_TEXT)
        assert format_matrix_text(m) == CERTIFIED_TEXT

    def test_text_comments_and_blanks(self):
        text = "# header\n\n-5 3  # row one\n5 -3\n"
        assert parse_matrix_text(text).rows == ((-5, 3), (5, -3))

    def test_json_round_trip(self):
        m = parse_matrix_text(CERTIFIED_TEXT)
        again = parse_matrix_json(format_matrix_json(m))
        assert again == m

    def test_json_size_mismatch(self):
        with pytest.raises(ValueError):
            parse_matrix_json('{"n": 3, "rows": [[1, 2], [3, 4]]}')

    def test_round_trip_random(self):
        rng = random.Random(97)
        for _ in range(40):
            n = rng.randint(1, 6)
            m = IntMatrix.from_rows(
                [[rng.randint(-10**6, 10**6) for _ in range(n)] for _ in range(n)]
            )
            assert parse_matrix_text(format_matrix_text(m)) == m
            assert parse_matrix_json(format_matrix_json(m)) == m


class TestCompute:
    def test_reference_rank_two(self, capsys):
        code, out, _ = run(capsys, "compute", "40", "70", "39", "104")
        assert code == 0
        assert "rank: 2" in out
        assert "-7 4 0 0" in out

    def test_small_pair(self, capsys):
        code, out, _ = run(capsys, "compute", "3", "5")
        assert code == 0
        assert "-5 3" in out and "5 -3" in out

    def test_redundant_generator_exits_2(self, capsys):
        code, _, err = run(capsys, "compute", "4", "6", "10")
        assert code == 2
        assert "10 is redundant" in err

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "compute", "--format", "json", "6", "8", "10", "13")
        assert code == 0
        payload = json.loads(out)
        assert payload["diagonal"] == [-3, -2, -2, -2]

    def test_dimension_cap_env(self, capsys, monkeypatch):
        monkeypatch.setenv("SEMIGROUP_PM_MAX_DIM", "3")
        code, _, err = run(capsys, "compute", "6", "8", "10", "13")
        assert code == 2
        assert "dimension cap" in err

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "out.txt"
        code, out, _ = run(capsys, "compute", "--output", str(target), "3", "5")
        assert code == 0
        assert target.read_text() == out

    def test_generators_from_file(self, capsys, tmp_path):
        f = tmp_path / "gens.txt"
        f.write_text("40 70\n39 104\n")
        code, out, _ = run(capsys, "compute", "--file", str(f))
        assert code == 0
        assert "rank: 2" in out


class TestEnumerate:
    def test_rank_histogram(self, capsys):
        code, out, _ = run(capsys, "enumerate", "22", "33", "26", "39", "34")
        assert code == 0
        assert "rank 3" in out and "rank 4" in out

    def test_single_matrix(self, capsys):
        code, out, _ = run(capsys, "enumerate", "3", "5")
        assert code == 0
        assert "matrices: 1" in out

    def test_both_reference_matrices_present(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--format", "json", "14", "21", "18", "24")
        payload = json.loads(out)
        rows = [tuple(tuple(r) for r in m["rows"]) for m in payload["matrices"]]
        assert ((-3, 2, 0, 0), (3, -2, 0, 0), (0, 0, -4, 3), (0, 0, 4, -3)) in rows
        assert ((-3, 0, 1, 1), (0, -2, 1, 1), (0, 0, -4, 3), (0, 0, 4, -3)) in rows


class TestCertify:
    def test_certified_exits_0(self, capsys, tmp_path):
        f = tmp_path / "m.txt"
        f.write_text(CERTIFIED_TEXT)
        code, out, _ = run(capsys, "certify", str(f))
        assert code == 0
        assert "verdict: Certified" in out

    def test_double_zero_column_exits_1(self, capsys, tmp_path):
        f = tmp_path / "m.txt"
        f.write_text(DOUBLE_ZERO_TEXT)
        code, out, _ = run(capsys, "certify", str(f))
        assert code == 1
        assert "column 4 has two zeros" in out

    def test_malformed_exits_2(self, capsys, tmp_path):
        f = tmp_path / "m.txt"
        f.write_text("1 2\n3 x\n")
        code, _, err = run(capsys, "certify", str(f))
        assert code == 2
        assert "error" in err

    def test_json_matrix_input(self, capsys, tmp_path):
        f = tmp_path / "m.json"
        f.write_text(format_matrix_json(parse_matrix_text(CERTIFIED_TEXT)))
        code, out, _ = run(capsys, "certify", str(f), "--matrix-format", "json")
        assert code == 0
        assert "Certified" in out


class TestRecover:
    def test_pseudo_matrix(self, capsys, tmp_path):
        f = tmp_path / "m.txt"
        f.write_text(PSEUDO_TEXT)
        code, out, _ = run(capsys, "recover", str(f))
        assert code == 0
        assert out.strip() == "7 11 12 16"

    def test_certified_matrix(self, capsys, tmp_path):
        f = tmp_path / "m.txt"
        f.write_text(CERTIFIED_TEXT)
        code, out, _ = run(capsys, "recover", str(f))
        assert code == 0
        assert out.strip() == "20 24 25 31"

    def test_rank_two_exits_1(self, capsys, tmp_path):
        f = tmp_path / "m.txt"
        f.write_text(RANK2_TEXT)
        code, out, _ = run(capsys, "recover", str(f))
        assert code == 1
        assert "recovery not unique" in out

    def test_missing_file_exits_2(self, capsys):
        code, _, err = run(capsys, "recover", "/nonexistent/m.txt")
        assert code == 2

    def test_lenient_flag_allows_minus_one_diagonal(self, capsys, tmp_path):
        f = tmp_path / "m.txt"
        f.write_text("-1 1\n1 -1\n")
        code, _, err = run(capsys, "recover", str(f))
        assert code == 2  # strict by default: diagonal -1 rejected
        assert "sign-pattern" in err
        code, out, _ = run(capsys, "recover", "--lenient", str(f))
        assert code == 0
        assert out.strip() == "1 1"


class TestClassify:
    def test_gluing_example(self, capsys):
        code, out, _ = run(capsys, "classify", "65", "104", "30", "70")
        assert code == 0
        assert "gluing: yes" in out

    def test_dim5_type_label(self, capsys):
        code, out, _ = run(capsys, "classify", "44", "77", "65", "91", "117")
        assert code == 0
        assert "type 3+2" in out

    def test_simple_split_detail(self, capsys):
        code, out, _ = run(capsys, "classify", "6", "8", "10", "13")
        assert code == 0
        assert "rank 3, simple split 2{3,4,5} ⊔ 13" in out

    def test_decompose_alias(self, capsys):
        code, out, _ = run(capsys, "decompose", "40", "70", "39", "104")
        assert code == 0
        assert "type 2+2" in out
        assert "gluing" not in out


class TestExamples:
    def test_embedded_corpus_passes(self, capsys):
        code, out, _ = run(capsys, "examples")
        assert code == 0
        assert "14/14 records pass" in out

    def test_perturbed_corpus_exits_1(self, capsys, tmp_path):
        records = [record_to_json(r) for r in EXAMPLES[:3]]
        records[1]["expected_ranks"] = [4]
        f = tmp_path / "corpus.json"
        f.write_text(json.dumps(records))
        code, out, _ = run(capsys, "examples", "--corpus", str(f))
        assert code == 1
        assert "FAIL: ed4-ex2" in out

    def test_empty_corpus_warns_and_passes(self, capsys, tmp_path):
        f = tmp_path / "corpus.json"
        f.write_text("[]")
        code, out, _ = run(capsys, "examples", "--corpus", str(f))
        assert code == 0
        assert "warning" in out


class TestFuzzCommand:
    def test_small_run_passes(self, capsys):
        code, out, _ = run(capsys, "fuzz", "--seed", "1", "--count", "20")
        assert code == 0
        assert "violations: 0" in out

    def test_zero_count_trivially_passes(self, capsys):
        code, out, _ = run(capsys, "fuzz", "--count", "0")
        assert code == 0
        assert "0 cases" in out

    def test_injected_mutation_is_reported(self):
        def flip(m):
            rows = [list(r) for r in m.rows]
            for i in range(len(rows)):
                for j in range(len(rows)):
                    if i != j and rows[i][j]:
                        rows[i][j] = -rows[i][j]
                        return IntMatrix.from_rows(rows)
            return m

        report = run_fuzz(seed=5, count=5, suites=("sign",), mutate=flip)
        assert not report.ok
        assert all(v.case_seed.startswith("5:") for v in report.violations)
