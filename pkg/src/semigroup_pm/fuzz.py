"""Randomized invariant checking.

The generator draws random minimal generator vectors, builds principal and
pseudo principal matrices from them, and runs every theorem oracle the
library exposes.  Each case carries its own reproduction seed; a failure
report names the seed, the suite, and what went wrong.

The optional ``mutate`` hook rewrites the matrix before the oracles run.
The test suite uses it to corrupt inputs deliberately and confirm that
violations are detected and reported; normal runs leave it unset.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from .linalg import (
    IntMatrix,
    eliminate,
    find_positive_kernel,
    kernel_basis,
    rank,
    selection_det,
    sylvester_identity_check,
)
from .principal import (
    PrincipalMatrix,
    PseudoPrincipalMatrix,
    principal_matrix,
    recover_generators,
)
from .semigroup import GeneratorVector, contains, is_minimal_generating, normalize
from .structure import check_vanishing_chain, max_nonzero_principal_minor, verify_sign_theorem

__all__ = ["Violation", "FuzzReport", "random_minimal_generators", "run_fuzz", "ALL_SUITES"]

ALL_SUITES = (
    "sign",
    "chain",
    "rank-bound",
    "max-minor",
    "sylvester",
    "elimination",
    "adjoint",
    "roundtrip",
    "kernel",
)


@dataclass(frozen=True)
class Violation:
    case_seed: str
    suite: str
    message: str

    def __str__(self) -> str:
        return f"[{self.suite}] seed={self.case_seed}: {self.message}"


@dataclass
class FuzzReport:
    cases: int = 0
    checks: dict[str, int] = field(default_factory=dict)
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def count(self, suite: str) -> None:
        self.checks[suite] = self.checks.get(suite, 0) + 1


def random_minimal_generators(rng: random.Random, max_dim: int, max_gen: int) -> GeneratorVector:
    """A random minimal generator vector with gcd 1 and 2..max_dim entries."""
    while True:
        n = rng.randint(2, max_dim)
        if max_gen < n + 2:
            raise ValueError("max_gen too small for the requested dimension")
        values = rng.sample(range(2, max_gen + 1), n)
        if math.gcd(*values) != 1:
            continue
        gens = GeneratorVector(tuple(values))
        while len(gens) > 1 and not is_minimal_generating(gens):
            for i in range(1, len(gens) + 1):
                if contains(gens.without(i), gens.values[i - 1]):
                    gens = gens.without(i)
                    break
        if len(gens) >= 2 and gens.gcd == 1:
            return gens


def _scaled_variant(rng: random.Random, pm: PrincipalMatrix) -> PseudoPrincipalMatrix:
    """Scale some rows by small positive integers: still pseudo principal."""
    rows = []
    for row in pm.matrix.rows:
        k = rng.choice((1, 1, 2, 3))
        rows.append(tuple(k * x for x in row))
    return PseudoPrincipalMatrix(
        matrix=IntMatrix(tuple(rows)), witness=pm.generators.values, strict=True
    )


def _grid_positive_search(basis: list[tuple[int, ...]], span: int) -> bool:
    """Brute-force search for a positive integer combination of the basis."""
    if not basis:
        return False
    n = len(basis[0])
    coeffs = [0] * len(basis)

    def rec(pos: int) -> bool:
        if pos == len(basis):
            vec = [sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(n)]
            return all(x > 0 for x in vec)
        for c in range(-span, span + 1):
            coeffs[pos] = c
            if rec(pos + 1):
                return True
        return False

    return rec(0)


def _check_pseudo(report: FuzzReport, case_seed: str, P: PseudoPrincipalMatrix, suites) -> None:
    mat = P.matrix
    n = mat.n_rows
    r = rank(mat)
    if "sign" in suites:
        report.count("sign")
        sign = verify_sign_theorem(P)
        if not sign.passed:
            report.violations.append(Violation(case_seed, "sign", "; ".join(sign.violations[:3])))
    if "chain" in suites:
        report.count("chain")
        if not check_vanishing_chain(P):
            report.violations.append(
                Violation(case_seed, "chain", "leading minors vanish non-contiguously")
            )
    if "rank-bound" in suites:
        report.count("rank-bound")
        if 2 * r < n:
            report.violations.append(
                Violation(case_seed, "rank-bound", f"rank {r} below half of n={n}")
            )
    if "max-minor" in suites:
        report.count("max-minor")
        idx = max_nonzero_principal_minor(P)
        if len(idx) != r:
            report.violations.append(
                Violation(
                    case_seed,
                    "max-minor",
                    f"largest nonzero principal minor has size {len(idx)}, rank is {r}",
                )
            )
    if "adjoint" in suites and r == n - 1:
        report.count("adjoint")
        all_nonzero = all(
            selection_det(mat, list(sub), list(sub)) != 0
            for sub in _size_subsets(n, n - 1)
        )
        has_pos = find_positive_kernel(mat.transpose()) is not None
        if all_nonzero != has_pos:
            report.violations.append(
                Violation(
                    case_seed,
                    "adjoint",
                    f"positive transpose kernel: {has_pos}, "
                    f"all size-{n - 1} principal minors nonzero: {all_nonzero}",
                )
            )


def _size_subsets(n: int, size: int):
    import itertools

    return itertools.combinations(range(n), size)


def _check_matrix_laws(report: FuzzReport, case_seed: str, mat: IntMatrix, suites) -> None:
    n = mat.n_rows
    if "sylvester" in suites:
        report.count("sylvester")
        for j in range(2, n + 1):
            for k in range(j, n + 1):
                for q in range(j, n + 1):
                    if not sylvester_identity_check(mat, j, k, q):
                        report.violations.append(
                            Violation(
                                case_seed,
                                "sylvester",
                                f"identity fails at (j,k,q)=({j},{k},{q})",
                            )
                        )
                        return
    if "elimination" in suites:
        report.count("elimination")
        depth = 1
        while depth < n and selection_det(mat, list(range(depth)), list(range(depth))) != 0:
            depth += 1
        result = eliminate(mat, depth)
        prod = 1
        for s in range(1, depth + 1):
            prod *= selection_det(mat, list(range(s)), list(range(s)))
            lhs = selection_det(result.matrix, list(range(s)), list(range(s)))
            if lhs != prod:
                report.violations.append(
                    Violation(
                        case_seed,
                        "elimination",
                        f"scaling law fails at depth {s}: {lhs} != {prod}",
                    )
                )
                return
    if "kernel" in suites:
        report.count("kernel")
        basis = kernel_basis(mat)
        for v in basis:
            if any(x != 0 for x in mat.mul_vector(v)):
                report.violations.append(Violation(case_seed, "kernel", f"{v} not annihilated"))
                return
            g = 0
            for x in v:
                g = math.gcd(g, x)
            if g != 1:
                report.violations.append(Violation(case_seed, "kernel", f"{v} not primitive"))
                return
            first = next((x for x in v if x), 0)
            if first < 0:
                report.violations.append(Violation(case_seed, "kernel", f"{v} sign not normalized"))
                return
        if len(basis) <= 3:
            fm = find_positive_kernel(mat) is not None
            grid = _grid_positive_search(basis, span=6)
            if grid and not fm:
                report.violations.append(
                    Violation(case_seed, "kernel", "grid search found a positive vector, solver did not")
                )


def run_fuzz(
    seed: int,
    count: int,
    max_dim: int = 6,
    max_gen: int = 120,
    suites: tuple[str, ...] = ALL_SUITES,
    mutate: Optional[Callable[[IntMatrix], IntMatrix]] = None,
) -> FuzzReport:
    """Run the invariant suites on ``count`` random minimal generator vectors."""
    report = FuzzReport()
    for case in range(count):
        case_seed = f"{seed}:{case}"
        rng = random.Random(case_seed)
        gens = random_minimal_generators(rng, max_dim=max_dim, max_gen=max_gen)
        pm = principal_matrix(gens)
        matrices = [pm.base, _scaled_variant(rng, pm)]
        if mutate is not None:
            matrices = [
                PseudoPrincipalMatrix(matrix=mutate(p.matrix), witness=p.witness, strict=p.strict)
                for p in matrices
            ]
        report.cases += 1
        for P in matrices:
            _check_pseudo(report, case_seed, P, suites)
        _check_matrix_laws(report, case_seed, pm.matrix if mutate is None else mutate(pm.matrix), suites)
        if "roundtrip" in suites and mutate is None:
            report.count("roundtrip")
            if rank(pm.matrix) == len(gens) - 1:
                recovered = recover_generators(pm.matrix)
                _, primitive = normalize(gens)
                if recovered != primitive.values:
                    report.violations.append(
                        Violation(
                            case_seed,
                            "roundtrip",
                            f"recovered {recovered} != {primitive.values}",
                        )
                    )
    return report
