"""Structural results as executable checks and classifiers.

The centrepiece is block decomposition: a pseudo principal matrix whose
rank is deficient splits, after a simultaneous row/column permutation,
into pseudo principal diagonal blocks plus residual rows that may lean on
the block columns.  The peeling loop below follows the constructive core
of that argument: find a smallest vanishing principal minor inside the
working index set, peel it off as a block (its rows are provably zero
outside it), repeat until no principal minor of the remainder vanishes.

Everything raises ArithmeticError if a step contradicts the theorems,
which would mean the input is not actually pseudo principal (or a bug).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .linalg import (
    IndexSet,
    IntMatrix,
    adjugate,
    find_positive_kernel,
    rank,
    selection_det,
)
from .principal import (
    PrincipalMatrix,
    PseudoPrincipalMatrix,
    all_principal_matrices,
    recover_generators,
)
from .semigroup import GeneratorVector, contains, is_minimal_generating

__all__ = [
    "SignTheoremReport",
    "DecompositionReport",
    "ScaledPart",
    "GluingVerdict",
    "Certificate",
    "CheckResult",
    "Dim4Classification",
    "Dim5Classification",
    "verify_sign_theorem",
    "check_vanishing_chain",
    "max_nonzero_principal_minor",
    "block_decompose",
    "detect_decompositions",
    "bounds_check",
    "classify_dim4",
    "classify_dim5",
    "certify_principal",
]


# ---------------------------------------------------------------------------
# sign theorem and vanishing chain


@dataclass(frozen=True)
class SignTheoremReport:
    passed: bool
    violations: tuple[str, ...]
    subsets_checked: int


def _principal_minors_by_subset(mat: IntMatrix) -> dict[tuple[int, ...], int]:
    n = mat.n_rows
    out: dict[tuple[int, ...], int] = {(): 1}
    for size in range(1, n + 1):
        for sub in itertools.combinations(range(n), size):
            out[sub] = selection_det(mat, list(sub), list(sub))
    return out


def verify_sign_theorem(P: PseudoPrincipalMatrix) -> SignTheoremReport:
    """Exhaustive oracle for the sign constraints on minors.

    For every subset I and admissible p != q outside I the signs of
    Delta_I and of the augmented minor A^{I,p}_{I,q} must be 0 or
    (-1)^|I|, and a vanishing Delta_I forces every Delta_{I+j} to vanish.
    Any violation is a build-breaking bug, not a property of the input.
    """
    mat = P.matrix
    n = mat.n_rows
    minors = _principal_minors_by_subset(mat)
    violations: list[str] = []
    for sub, value in minors.items():
        want = (-1) ** len(sub)
        if value != 0 and (1 if value > 0 else -1) != want:
            violations.append(
                f"Delta_{{{','.join(str(i + 1) for i in sub)}}} = {value} has the wrong sign"
            )
    for sub, value in minors.items():
        if value == 0:
            for j in range(n):
                if j not in sub:
                    bigger = tuple(sorted(sub + (j,)))
                    if minors[bigger] != 0:
                        violations.append(
                            f"Delta vanishes on {tuple(i + 1 for i in sub)} but not on "
                            f"{tuple(i + 1 for i in bigger)}"
                        )
    checked = len(minors)
    for size in range(0, n - 1):
        for sub in itertools.combinations(range(n), size):
            outside = [p for p in range(n) if p not in sub]
            want = (-1) ** size
            for p in outside:
                for q in outside:
                    if p == q:
                        continue
                    value = selection_det(mat, list(sub) + [p], list(sub) + [q])
                    checked += 1
                    if value != 0 and (1 if value > 0 else -1) != want:
                        violations.append(
                            f"A^{{{tuple(i + 1 for i in sub)},{p + 1}}}"
                            f"_{{{tuple(i + 1 for i in sub)},{q + 1}}} = {value} has the wrong sign"
                        )
    return SignTheoremReport(
        passed=not violations, violations=tuple(violations), subsets_checked=checked
    )


def check_vanishing_chain(P: PseudoPrincipalMatrix) -> bool:
    """Leading principal minors may vanish only as a suffix of the chain."""
    mat = P.matrix
    n = mat.n_rows
    seen_zero = False
    for r in range(1, n + 1):
        value = selection_det(mat, list(range(r)), list(range(r)))
        if value == 0:
            seen_zero = True
        elif seen_zero:
            return False
    return True


def max_nonzero_principal_minor(P: PseudoPrincipalMatrix) -> IndexSet:
    """An index set of size rank(M) whose principal minor is nonzero.

    Searches subsets by descending size, lexicographically within a size,
    and returns the first nonzero hit.  That its size equals the rank is a
    theorem about pseudo principal matrices (false for general matrices).
    """
    mat = P.matrix
    n = mat.n_rows
    for size in range(n, 0, -1):
        for sub in itertools.combinations(range(n), size):
            if selection_det(mat, list(sub), list(sub)) != 0:
                return IndexSet.from_iterable(i + 1 for i in sub)
    raise ArithmeticError("pseudo principal matrix with all principal minors zero")


# ---------------------------------------------------------------------------
# block decomposition


@dataclass(frozen=True)
class ScaledPart:
    scale: int
    primitive: GeneratorVector

    def __str__(self) -> str:
        return f"{self.scale}{self.primitive}"


@dataclass(frozen=True)
class DecompositionReport:
    """Block-lower-triangular shape exhibited by a permutation.

    Applying the permutation (new position -> original index, 1-based) to
    rows and columns puts the pseudo principal blocks first as a block
    diagonal, with exact zeros to their right, and the residual mixing
    rows at the bottom.  block_sizes lists the block sizes followed by one
    1 per residual row, so they always sum to n.
    """

    permutation: tuple[int, ...]
    block_sizes: tuple[int, ...]
    blocks: tuple[PseudoPrincipalMatrix, ...]
    residual: Optional[IntMatrix]
    scaled_parts: tuple[ScaledPart, ...]

    @property
    def n_residual(self) -> int:
        return len(self.block_sizes) - len(self.blocks)

    @property
    def type_string(self) -> str:
        """Block sizes sorted ascending, then one '1' per residual row."""
        p = len(self.blocks)
        blocks = sorted(self.block_sizes[:p])
        ones = self.block_sizes[p:]
        return "+".join(str(s) for s in list(blocks) + list(ones))

    def type_parts(self) -> tuple[int, ...]:
        """The multiset of parts, sorted descending (for comparisons)."""
        return tuple(sorted(self.block_sizes, reverse=True))

    def permuted_matrix(self, mat: IntMatrix) -> IntMatrix:
        order = [i - 1 for i in self.permutation]
        return IntMatrix.from_rows(
            [[mat.rows[i][j] for j in order] for i in order]
        )


def _smallest_vanishing_subset(mat: IntMatrix, pool: Sequence[int]) -> Optional[list[int]]:
    """Smallest (then lexicographically first) subset of pool with zero minor."""
    pool = sorted(pool)
    for size in range(1, len(pool) + 1):
        for sub in itertools.combinations(pool, size):
            if selection_det(mat, list(sub), list(sub)) == 0:
                return list(sub)
    return None


def block_decompose(P: PseudoPrincipalMatrix) -> DecompositionReport:
    """Peel pseudo principal blocks until the remainder has no vanishing minor.

    Each round finds a smallest vanishing principal minor inside the
    working set; those rows are guaranteed to vanish outside the block, so
    the block splits off with its slice of the witness.  If the whole
    matrix is the only vanishing minor the report is the trivial single
    block.  The residual rows (with no vanishing principal minor among
    them) stay at the bottom and may lean on every block's columns.
    """
    mat = P.matrix
    wit = P.witness
    n = mat.n_rows
    remaining = list(range(n))
    blocks_idx: list[list[int]] = []
    while remaining:
        sub = _smallest_vanishing_subset(mat, remaining)
        if sub is None:
            break
        for i in sub:
            for q in range(n):
                if q not in sub and mat.rows[i][q] != 0:
                    raise ArithmeticError(
                        f"row {i + 1} of a minimal vanishing block has a nonzero entry "
                        f"in column {q + 1}; input is not pseudo principal"
                    )
        blocks_idx.append(sub)
        remaining = [i for i in remaining if i not in sub]
    order = [i for sub in blocks_idx for i in sub] + remaining
    blocks = []
    parts = []
    for sub in blocks_idx:
        block_mat = IntMatrix.from_rows([[mat.rows[i][j] for j in sub] for i in sub])
        sub_wit = tuple(wit[i] for i in sub)
        blocks.append(PseudoPrincipalMatrix(matrix=block_mat, witness=sub_wit, strict=P.strict))
        g = math.gcd(*sub_wit)
        parts.append(ScaledPart(scale=g, primitive=GeneratorVector(tuple(v // g for v in sub_wit))))
    residual = None
    if remaining:
        residual = IntMatrix.from_rows(
            [[mat.rows[i][j] for j in order] for i in remaining]
        )
    sizes = tuple(len(sub) for sub in blocks_idx) + (1,) * len(remaining)
    return DecompositionReport(
        permutation=tuple(i + 1 for i in order),
        block_sizes=sizes,
        blocks=tuple(blocks),
        residual=residual,
        scaled_parts=tuple(parts),
    )


# ---------------------------------------------------------------------------
# decompositions of the generator vector itself


@dataclass(frozen=True)
class GluingVerdict:
    """One bipartition a = d*b | e*c with coprime scales.

    is_gluing uses the membership conditions (d in <c> minus c, e in <b>
    minus b, both parts minimally generating).  is_ordinary means some
    principal matrix of a is exactly the block concatenation of principal
    matrices of the parts; None means the enumeration was truncated before
    that could be decided.  is_simple_split marks |c| = 1.
    """

    d: int
    e: int
    b: GeneratorVector
    c: GeneratorVector
    b_positions: tuple[int, ...]
    c_positions: tuple[int, ...]
    is_ordinary: Optional[bool]
    is_gluing: bool
    is_simple_split: bool

    def __str__(self) -> str:
        return f"{self.d}{self.b} | {self.e}{self.c}"


def _is_block_concatenation(mat: IntMatrix, part1: Sequence[int], part2: Sequence[int]) -> bool:
    for i in part1:
        for j in part2:
            if mat.rows[i][j] != 0 or mat.rows[j][i] != 0:
                return False
    return True


def detect_decompositions(a: GeneratorVector, cap: int = 10000) -> list[GluingVerdict]:
    """All bipartitions of a with coprime extracted scales, with verdicts.

    Singleton parts are normalized to the c side.  Ordinariness quantifies
    over the principal matrices of a, so a truncated enumeration downgrades
    is_ordinary to None (unknown) for bipartitions without a witness.
    """
    n = len(a)
    if n < 3:
        raise ValueError("decomposition search needs at least three generators")
    enum = all_principal_matrices(a, cap=cap)
    verdicts: list[GluingVerdict] = []
    for size in range(1, n):
        for part1 in itertools.combinations(range(n), size):
            if 0 not in part1:
                continue  # each bipartition once: part1 holds position 1
            part2 = tuple(i for i in range(n) if i not in part1)
            vals1 = tuple(a.values[i] for i in part1)
            vals2 = tuple(a.values[i] for i in part2)
            d = math.gcd(*vals1)
            e = math.gcd(*vals2)
            if math.gcd(d, e) != 1:
                continue
            if len(part1) == 1 and len(part2) > 1:
                part1, part2 = part2, part1
                vals1, vals2 = vals2, vals1
                d, e = e, d
            b = GeneratorVector(tuple(v // d for v in vals1))
            c = GeneratorVector(tuple(v // e for v in vals2))
            parts_minimal = is_minimal_generating(b) and is_minimal_generating(c)
            gluing = (
                parts_minimal
                and contains(c, d)
                and d not in c.values
                and contains(b, e)
                and e not in b.values
            )
            ordinary: Optional[bool]
            if len(b) < 2 or len(c) < 2 or not parts_minimal:
                ordinary = False
            else:
                ordinary = any(
                    _is_block_concatenation(pm.matrix, part1, part2) for pm in enum
                )
                if not ordinary and enum.truncated:
                    ordinary = None
            verdicts.append(
                GluingVerdict(
                    d=d,
                    e=e,
                    b=b,
                    c=c,
                    b_positions=tuple(i + 1 for i in part1),
                    c_positions=tuple(i + 1 for i in part2),
                    is_ordinary=ordinary,
                    is_gluing=gluing,
                    is_simple_split=len(c) == 1,
                )
            )
    return verdicts


def bounds_check(v: GluingVerdict, M: Union[IntMatrix, PseudoPrincipalMatrix]) -> bool:
    """Scale bounds for a 2+2 concatenation: d exceeds both of c, e both of b.

    Precondition: both parts are pairs and M really is the concatenation of
    the parts' principal matrices under the verdict's positions.
    """
    if len(v.b) != 2 or len(v.c) != 2:
        raise ValueError("bounds check applies to 2+2 decompositions only")
    mat = M.matrix if isinstance(M, PseudoPrincipalMatrix) else M
    part1 = tuple(i - 1 for i in v.b_positions)
    part2 = tuple(i - 1 for i in v.c_positions)
    if not _is_block_concatenation(mat, part1, part2):
        raise ValueError("matrix is not the block concatenation for this bipartition")
    return v.d > max(v.c.values) and v.e > max(v.b.values)


# ---------------------------------------------------------------------------
# low embedding dimension classifiers


@dataclass(frozen=True)
class Dim4Classification:
    matrix: PrincipalMatrix
    rank: int
    case: str
    matches: tuple[str, ...]
    detail: str
    report: DecompositionReport


@dataclass(frozen=True)
class Dim5Classification:
    matrix: PrincipalMatrix
    rank: int
    case: str
    detail: str
    report: DecompositionReport


def _format_split(part: ScaledPart, residue: int) -> str:
    return f"simple split {part.scale}{part.primitive} ⊔ {residue}"


def _dim4_predicates(a: GeneratorVector, pm: PrincipalMatrix) -> tuple[str, ...]:
    """All of the three dim-4 rank-3 case predicates that hold for (a, M)."""
    matches = []
    if find_positive_kernel(pm.matrix.transpose()) is not None:
        matches.append("PositiveTransposeKernel")
    vals = a.values
    for pair in itertools.combinations(range(4), 2):
        rest = tuple(i for i in range(4) if i not in pair)
        d = math.gcd(vals[pair[0]], vals[pair[1]])
        pair_prim = GeneratorVector((vals[pair[0]] // d, vals[pair[1]] // d))
        if all(contains(pair_prim, vals[i]) for i in rest):
            matches.append("PairPlusSubsemigroup")
            break
    for triple in itertools.combinations(range(4), 3):
        residue = next(i for i in range(4) if i not in triple)
        d = math.gcd(*(vals[i] for i in triple))
        if d < 2:
            continue
        prim = GeneratorVector(tuple(vals[i] // d for i in triple))
        e = vals[residue]
        if is_minimal_generating(prim) and contains(prim, e) and e not in prim.values:
            matches.append("SimpleSplit")
            break
    return tuple(matches)


def classify_dim4(a: GeneratorVector, cap: int = 10000) -> list[Dim4Classification]:
    """Classify every principal matrix of a 4-generator vector.

    Rank 2 is always the two-pair concatenation.  For rank 3 the primary
    label follows the matrix's own block shape: no vanishing proper minor
    means the transpose has a positive kernel; a pair block with two mixing
    rows is the pair-plus-subsemigroup case; a 3-block with one mixing row
    is the simple split.  All case predicates that hold for (a, M) are
    also reported, since the cases are not mutually exclusive as
    properties of a.
    """
    if len(a) != 4:
        raise ValueError("dimension 4 classifier needs exactly 4 generators")
    out = []
    for pm in all_principal_matrices(a, cap=cap):
        r = rank(pm.matrix)
        report = block_decompose(pm.base)
        matches = _dim4_predicates(a, pm)
        sizes = tuple(b.n for b in report.blocks)
        if r == 2:
            case = "TwoPlusTwo"
            detail = " | ".join(str(p) for p in report.scaled_parts)
        elif r == 3:
            if sizes == (4,) or not report.blocks:
                kernel = find_positive_kernel(pm.matrix.transpose())
                if kernel is not None:
                    case = "PositiveTransposeKernel"
                    detail = f"transpose kernel {kernel}"
                else:
                    case = "Unclassified"
                    detail = "no vanishing proper minor yet no positive transpose kernel"
            elif sizes == (3,):
                part = report.scaled_parts[0]
                residue_pos = report.permutation[3] - 1
                e = a.values[residue_pos]
                if (
                    part.scale >= 2
                    and is_minimal_generating(part.primitive)
                    and contains(part.primitive, e)
                    and e not in part.primitive.values
                ):
                    case = "SimpleSplit"
                    detail = _format_split(part, e)
                else:
                    case = "Unclassified"
                    detail = (
                        f"3-block {part} with residue {e} is not a simple-split gluing; "
                        "potential counterexample"
                    )
            elif sizes == (2,):
                part = report.scaled_parts[0]
                rest = [a.values[i - 1] for i in report.permutation[2:]]
                if all(contains(part.primitive, x) for x in rest):
                    case = "PairPlusSubsemigroup"
                    detail = f"{part} with {rest[0]}, {rest[1]} in <{part.primitive}>"
                else:
                    case = "Unclassified"
                    detail = (
                        f"pair block {part} but {rest} are not all in <{part.primitive}>; "
                        "potential counterexample"
                    )
            else:
                case = "Unclassified"
                detail = f"unexpected block sizes {sizes}"
        else:
            case = "Unclassified"
            detail = f"unexpected rank {r}"
        out.append(
            Dim4Classification(
                matrix=pm, rank=r, case=case, matches=matches, detail=detail, report=report
            )
        )
    return out


def classify_dim5(a: GeneratorVector, cap: int = 10000) -> list[Dim5Classification]:
    """Classify every principal matrix of a 5-generator vector.

    Rank 3 splits as a 3-block plus a 2-block, or as two 2-blocks plus one
    mixing row.  Rank 4 is the maximal-rank case; when a principal minor
    of size 4 vanishes it carries the block-plus-residual structure, and
    otherwise the transpose has a positive kernel.
    """
    if len(a) != 5:
        raise ValueError("dimension 5 classifier needs exactly 5 generators")
    out = []
    for pm in all_principal_matrices(a, cap=cap):
        r = rank(pm.matrix)
        report = block_decompose(pm.base)
        sizes = tuple(sorted((b.n for b in report.blocks), reverse=True))
        residual = len(a) - sum(b.n for b in report.blocks)
        if r == 3:
            if sizes == (3, 2):
                case = "ThreePlusTwo"
                detail = " | ".join(str(p) for p in report.scaled_parts)
            elif sizes == (2, 2) and residual == 1:
                case = "OnePlusTwoPlusTwo"
                detail = " | ".join(str(p) for p in report.scaled_parts)
            else:
                case = "Unclassified"
                detail = f"unexpected shape: blocks {sizes}, residual {residual}"
        elif r == 4:
            case = "MaxRank"
            if sizes and sizes != (5,):
                detail = f"blocks {sizes} with {residual} mixing row(s)"
            else:
                kernel = find_positive_kernel(pm.matrix.transpose())
                detail = f"no vanishing proper minor; transpose kernel {kernel}"
        else:
            case = "Unclassified"
            detail = f"unexpected rank {r}"
        out.append(Dim5Classification(matrix=pm, rank=r, case=case, detail=detail, report=report))
    return out


# ---------------------------------------------------------------------------
# sufficiency certificate


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class Certificate:
    """Outcome of the sufficiency test for principality.

    Certified means the matrix provably is the principal matrix of its
    recovered generator vector.  Unknown only means the sufficient
    condition failed; the matrix may still be principal.
    """

    verdict: str  # "Certified" | "Unknown"
    checks: tuple[CheckResult, ...]
    recovered: Optional[tuple[int, ...]] = None

    @property
    def certified(self) -> bool:
        return self.verdict == "Certified"


def _spell_count(k: int) -> str:
    words = {2: "two", 3: "three", 4: "four"}
    return words.get(k, str(k))


def certify_principal(M: IntMatrix) -> Certificate:
    """Six named checks that together certify a matrix as principal.

    Sign pattern with diagonal at most -2, rank n-1, zero column sums,
    primitive first adjugate column, no column with two zeros, and n >= 3.
    All six passing implies the matrix equals the principal matrix of the
    recovered generators and the embedding dimension is n.
    """
    if not M.is_square:
        raise ValueError("certification requires a square matrix")
    n = M.n_rows
    checks: list[CheckResult] = []

    ok_sign = True
    sign_detail = "diagonal <= -2 and off-diagonal >= 0"
    for i in range(n):
        for j in range(n):
            v = M.rows[i][j]
            if i == j and v > -2:
                ok_sign = False
                sign_detail = f"diagonal entry ({i + 1},{i + 1}) = {v} is not <= -2"
            elif i != j and v < 0:
                ok_sign = False
                sign_detail = f"off-diagonal entry ({i + 1},{j + 1}) = {v} is negative"
    checks.append(CheckResult("sign pattern with c_i >= 2", ok_sign, sign_detail))

    r = rank(M)
    checks.append(CheckResult("rank = n-1", r == n - 1, f"rank is {r}, n-1 is {n - 1}"))

    col_sums = [sum(M.rows[i][j] for i in range(n)) for j in range(n)]
    bad = next((j for j, s in enumerate(col_sums) if s != 0), None)
    checks.append(
        CheckResult(
            "columns sum to zero",
            bad is None,
            "all column sums are zero" if bad is None else f"column {bad + 1} sums to {col_sums[bad]}",
        )
    )

    if n >= 2:
        adj = adjugate(M)
        first_col = [adj.rows[i][0] for i in range(n)]
        g = 0
        for x in first_col:
            g = math.gcd(g, x)
        if all(x == 0 for x in first_col):
            checks.append(
                CheckResult("first adjugate column primitive", False, "first adjugate column is zero")
            )
        else:
            checks.append(
                CheckResult(
                    "first adjugate column primitive",
                    g == 1,
                    f"gcd of first adjugate column is {g}",
                )
            )
    else:
        checks.append(CheckResult("first adjugate column primitive", False, "matrix too small"))

    zero_cols = [(j, sum(1 for i in range(n) if M.rows[i][j] == 0)) for j in range(n)]
    worst = max(zero_cols, key=lambda t: t[1])
    ok_zeros = worst[1] < 2
    checks.append(
        CheckResult(
            "no column with two zeros",
            ok_zeros,
            "every column has at most one zero"
            if ok_zeros
            else f"column {worst[0] + 1} has {_spell_count(worst[1])} zeros",
        )
    )

    checks.append(CheckResult("n >= 3", n >= 3, f"n = {n}"))

    recovered: Optional[tuple[int, ...]] = None
    if all(c.passed for c in checks):
        try:
            recovered = recover_generators(M)
        except ValueError as exc:
            checks.append(CheckResult("generator recovery", False, str(exc)))
    verdict = "Certified" if all(c.passed for c in checks) and recovered else "Unknown"
    return Certificate(verdict=verdict, checks=tuple(checks), recovered=recovered)
