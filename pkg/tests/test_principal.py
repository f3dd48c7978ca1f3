import math
import random

import pytest

from semigroup_pm.linalg import IntMatrix, rank
from semigroup_pm.principal import (
    PseudoPrincipalMatrix,
    PseudoRejection,
    all_principal_matrices,
    critical_exponent,
    is_principal,
    principal_matrix,
    recover_generators,
    validate_pseudo,
)
from semigroup_pm.semigroup import GeneratorVector, is_minimal_generating, normalize

PSEUDO = IntMatrix.from_rows([[-4, 0, 1, 1], [1, -5, 4, 0], [0, 4, -5, 1], [3, 1, 0, -2]])
CERTIFIED = IntMatrix.from_rows([[-4, 1, 1, 1], [2, -4, 1, 1], [1, 1, -3, 1], [1, 2, 1, -3]])


def random_minimal(rng, max_dim=6, max_gen=120):
    while True:
        n = rng.randint(2, max_dim)
        values = rng.sample(range(2, max_gen + 1), n)
        if math.gcd(*values) != 1:
            continue
        gens = GeneratorVector(tuple(values))
        while len(gens) > 1 and not is_minimal_generating(gens):
            for i in range(1, len(gens) + 1):
                from semigroup_pm.semigroup import contains

                if contains(gens.without(i), gens.values[i - 1]):
                    gens = gens.without(i)
                    break
        if len(gens) >= 2 and gens.gcd == 1:
            return gens


class TestCriticalExponent:
    def test_first_generator(self):
        assert critical_exponent(GeneratorVector.of(22, 33, 26, 39, 34), 1) == 3

    def test_fifth_generator(self):
        assert critical_exponent(GeneratorVector.of(22, 33, 26, 39, 34), 5) == 4

    def test_small_pair(self):
        assert critical_exponent(GeneratorVector.of(3, 5), 1) == 5
        assert critical_exponent(GeneratorVector.of(3, 5), 2) == 3

    def test_singleton_rejected(self):
        with pytest.raises(ValueError):
            critical_exponent(GeneratorVector.of(7), 1)

    def test_non_minimal_reports_one(self):
        # 10 = 4 + 6, so the exponent degenerates to 1 instead of erroring
        assert critical_exponent(GeneratorVector.of(4, 6, 10), 3) == 1


class TestPrincipalMatrix:
    def test_rank_two_reference(self):
        pm = principal_matrix(GeneratorVector.of(40, 70, 39, 104))
        assert pm.matrix.rows == (
            (-7, 4, 0, 0),
            (7, -4, 0, 0),
            (0, 0, -8, 3),
            (0, 0, 8, -3),
        )

    def test_diagonal_of_six_eight_ten_thirteen(self):
        pm = principal_matrix(GeneratorVector.of(6, 8, 10, 13))
        assert pm.diagonal == (-3, -2, -2, -2)

    def test_small_pair(self):
        pm = principal_matrix(GeneratorVector.of(3, 5))
        assert pm.matrix.rows == ((-5, 3), (5, -3))

    def test_redundant_generator_rejected(self):
        with pytest.raises(ValueError, match="10 is redundant"):
            principal_matrix(GeneratorVector.of(4, 6, 10))

    def test_non_numerical_warns(self):
        with pytest.warns(UserWarning, match="gcd 2"):
            principal_matrix(GeneratorVector.of(6, 10, 14))

    def test_annihilates_generators(self):
        pm = principal_matrix(GeneratorVector.of(20, 24, 25, 31))
        assert pm.matrix.mul_vector((20, 24, 25, 31)) == (0, 0, 0, 0)

    def test_diagonal_proofs(self):
        pm = principal_matrix(GeneratorVector.of(3, 5))
        assert [p.exponent for p in pm.diagonal_certified] == [5, 3]


class TestAllPrincipalMatrices:
    def test_both_ranks_realized(self):
        enum = all_principal_matrices(GeneratorVector.of(22, 33, 26, 39, 34))
        ranks = {rank(pm.matrix) for pm in enum}
        assert ranks == {3, 4}
        rows = {pm.matrix.rows for pm in enum}
        assert (
            (-3, 2, 0, 0, 0),
            (3, -2, 0, 0, 0),
            (0, 0, -3, 2, 0),
            (0, 0, 3, -2, 0),
            (5, 0, 1, 0, -4),
        ) in rows
        assert (
            (-3, 2, 0, 0, 0),
            (3, -2, 0, 0, 0),
            (2, 0, -3, 0, 1),
            (0, 0, 3, -2, 0),
            (5, 0, 1, 0, -4),
        ) in rows

    def test_unique_for_small_pair(self):
        enum = all_principal_matrices(GeneratorVector.of(3, 5))
        assert len(enum) == 1 and not enum.truncated

    def test_two_reference_matrices_for_14_21_18_24(self):
        enum = all_principal_matrices(GeneratorVector.of(14, 21, 18, 24))
        rows = {pm.matrix.rows: rank(pm.matrix) for pm in enum}
        m2 = ((-3, 2, 0, 0), (3, -2, 0, 0), (0, 0, -4, 3), (0, 0, 4, -3))
        m3 = ((-3, 0, 1, 1), (0, -2, 1, 1), (0, 0, -4, 3), (0, 0, 4, -3))
        assert rows[m2] == 2 and rows[m3] == 3

    def test_cap_truncates(self):
        enum = all_principal_matrices(GeneratorVector.of(22, 33, 26, 39, 34), cap=3)
        assert len(enum) == 3 and enum.truncated

    def test_shared_diagonal(self):
        enum = all_principal_matrices(GeneratorVector.of(22, 33, 26, 39, 34))
        diags = {pm.diagonal for pm in enum}
        assert diags == {(-3, -2, -3, -2, -4)}


class TestValidatePseudo:
    def test_accepts_reference_pseudo(self):
        got = validate_pseudo(PSEUDO)
        assert isinstance(got, PseudoPrincipalMatrix)
        assert got.witness == (7, 11, 12, 16)

    def test_rejects_identity(self):
        got = validate_pseudo(IntMatrix.identity(3))
        assert isinstance(got, PseudoRejection)
        assert "diagonal" in got.reason

    def test_strictness_flag(self):
        m = IntMatrix.from_rows([[-1, 1], [1, -1]])
        strict = validate_pseudo(m, strict=True)
        assert isinstance(strict, PseudoRejection)
        assert strict.position == (1, 1)
        lenient = validate_pseudo(m, strict=False)
        assert isinstance(lenient, PseudoPrincipalMatrix)
        assert lenient.witness == (1, 1)

    def test_rejects_without_positive_kernel(self):
        m = IntMatrix.from_rows([[-2, 1], [1, -2]])
        got = validate_pseudo(m)
        assert isinstance(got, PseudoRejection)
        assert "kernel" in got.reason


class TestRecoverGenerators:
    def test_pseudo_example(self):
        assert recover_generators(PSEUDO) == (7, 11, 12, 16)

    def test_certified_example(self):
        assert recover_generators(CERTIFIED) == (20, 24, 25, 31)

    def test_transpose_gives_all_ones(self):
        assert recover_generators(CERTIFIED.transpose()) == (1, 1, 1, 1)

    def test_rank_deficient_rejected(self):
        rank2 = IntMatrix.from_rows([[-7, 4, 0, 0], [7, -4, 0, 0], [0, 0, -8, 3], [0, 0, 8, -3]])
        with pytest.raises(ValueError, match="recovery not unique"):
            recover_generators(rank2)


class TestIsPrincipal:
    def test_pseudo_fails_with_row_explanation(self):
        report = is_principal(PSEUDO)
        assert not report
        assert report.reason == "row 2: c_2 = 3 < 5"
        assert report.row == 2 and report.true_exponent == 3

    def test_certified_matrix_is_principal(self):
        assert is_principal(CERTIFIED, GeneratorVector.of(20, 24, 25, 31))

    def test_roundtrip_canonical_matrices(self):
        for gens in [(3, 5), (6, 8, 10, 13), (40, 70, 39, 104), (22, 33, 26, 39, 34)]:
            pm = principal_matrix(GeneratorVector(gens))
            assert is_principal(pm, GeneratorVector(gens))

    def test_wrong_witness_rejected(self):
        with pytest.raises(ValueError, match="annihilate"):
            is_principal(CERTIFIED, GeneratorVector.of(1, 2, 3, 4))


class TestInvariants:
    def test_roundtrip_recovery(self):
        rng = random.Random(101)
        done = 0
        while done < 60:
            gens = random_minimal(rng)
            pm = principal_matrix(gens)
            if rank(pm.matrix) != len(gens) - 1:
                continue
            _, primitive = normalize(gens)
            assert recover_generators(pm.matrix) == primitive.values
            done += 1

    def test_rank_bounds(self):
        rng = random.Random(103)
        for _ in range(60):
            gens = random_minimal(rng)
            pm = principal_matrix(gens)
            n = len(gens)
            r = rank(pm.matrix)
            assert r <= n - 1
            assert 2 * r >= n
            if n > 2:
                assert r >= 2

    def test_every_enumerated_matrix_annihilates(self):
        enum = all_principal_matrices(GeneratorVector.of(14, 21, 18, 24))
        for pm in enum:
            assert all(x == 0 for x in pm.matrix.mul_vector((14, 21, 18, 24)))
