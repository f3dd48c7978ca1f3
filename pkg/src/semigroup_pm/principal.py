"""Principal matrices: construction, enumeration, validation, recovery.

The principal matrix of generators a = (a_1, .., a_n) has diagonal -c_i,
where c_i is the smallest positive integer with c_i a_i representable over
the other generators, and row i encodes one such representation.  The
diagonal is unique; the off-diagonal rows need not be, so a single a can
have several principal matrices (even of different ranks).

A pseudo principal matrix only has the sign pattern (negative diagonal,
non-negative elsewhere) and a positive kernel witness; its diagonal need
not be minimal.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .linalg import IntMatrix, adjugate, find_positive_kernel, rank
from .semigroup import (
    GeneratorVector,
    Representation,
    canonical_representation,
    contains,
    is_minimal_generating,
    representations,
    _reachable_bits,
)

__all__ = [
    "PseudoPrincipalMatrix",
    "PseudoRejection",
    "PrincipalMatrix",
    "DiagonalProof",
    "PrincipalEnumeration",
    "PrincipalityReport",
    "critical_exponent",
    "principal_matrix",
    "all_principal_matrices",
    "validate_pseudo",
    "recover_generators",
    "is_principal",
]


@dataclass(frozen=True)
class PseudoPrincipalMatrix:
    """Square integer matrix with the principal sign pattern and a witness.

    witness is a strictly positive integer vector annihilated by the
    matrix.  strict=True means every diagonal entry is at most -2 (the
    honest principal situation); lenient allows -1.  Use
    :func:`validate_pseudo` to build one from a raw matrix.
    """

    matrix: IntMatrix
    witness: tuple[int, ...]
    strict: bool = True

    @property
    def n(self) -> int:
        return self.matrix.n_rows

    def transpose_matrix(self) -> IntMatrix:
        return self.matrix.transpose()


@dataclass(frozen=True)
class PseudoRejection:
    """Why a matrix failed pseudo-principal validation."""

    reason: str
    position: Optional[tuple[int, int]] = None  # 1-based, for sign violations

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class DiagonalProof:
    """Per-row certificate that the diagonal entry is the critical exponent.

    exponent*a_row is representable over the other generators while every
    smaller positive multiple is not (all of 1..exponent-1 were checked).
    """

    row: int
    exponent: int
    smaller_multiples_checked: int


@dataclass(frozen=True)
class PrincipalMatrix:
    base: PseudoPrincipalMatrix
    generators: GeneratorVector
    diagonal_certified: tuple[DiagonalProof, ...]

    @property
    def matrix(self) -> IntMatrix:
        return self.base.matrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return self.base.matrix.diagonal()


@dataclass(frozen=True)
class PrincipalEnumeration:
    matrices: tuple[PrincipalMatrix, ...]
    truncated: bool

    def __iter__(self):
        return iter(self.matrices)

    def __len__(self) -> int:
        return len(self.matrices)


def critical_exponent(a: GeneratorVector, i: int) -> int:
    """Smallest r >= 1 with r*a_i representable over the other generators.

    The search is capped at min of the other generators, which always
    suffices: a_j * a_i is a multiple of a_j.  For a non-minimal a the
    result can be 1; that is reported, not rejected.
    """
    if len(a) < 2:
        raise ValueError("critical exponent needs at least two generators")
    if not 1 <= i <= len(a):
        raise ValueError(f"index {i} out of range 1..{len(a)}")
    ai = a.values[i - 1]
    others = a.without(i)
    cap = min(others.values)
    bits = _reachable_bits(others.values, cap * ai)
    for r in range(1, cap + 1):
        if (bits >> (r * ai)) & 1:
            return r
    raise AssertionError("critical exponent must exist within the cap")


def _row_from_representation(n: int, i: int, c: int, rep: Representation) -> tuple[int, ...]:
    """Assemble row i (1-based) with -c on the diagonal and rep elsewhere."""
    row = []
    k = 0
    for j in range(n):
        if j == i - 1:
            row.append(-c)
        else:
            row.append(rep[k])
            k += 1
    return tuple(row)


def _check_usable(a: GeneratorVector) -> None:
    if len(a) < 2:
        raise ValueError("need at least two generators")
    if not is_minimal_generating(a):
        for i in range(1, len(a) + 1):
            v = a.values[i - 1]
            if contains(a.without(i), v):
                raise ValueError(
                    f"generator {v} is redundant: it lies in the monoid of the others"
                )
    if a.gcd != 1:
        warnings.warn(
            f"generators have gcd {a.gcd}; the semigroup is not numerical",
            stacklevel=3,
        )


def principal_matrix(a: GeneratorVector) -> PrincipalMatrix:
    """The canonical principal matrix of a.

    Row i uses the lexicographically smallest representation of c_i*a_i
    over the other generators, so the output is deterministic.  Other
    principal matrices of the same a come from
    :func:`all_principal_matrices`.
    """
    _check_usable(a)
    n = len(a)
    rows = []
    proofs = []
    for i in range(1, n + 1):
        c = critical_exponent(a, i)
        rep = canonical_representation(a.without(i), c * a.values[i - 1])
        assert rep is not None
        rows.append(_row_from_representation(n, i, c, rep))
        proofs.append(DiagonalProof(row=i, exponent=c, smaller_multiples_checked=c - 1))
    mat = IntMatrix(tuple(rows))
    base = PseudoPrincipalMatrix(matrix=mat, witness=a.values, strict=True)
    return PrincipalMatrix(base=base, generators=a, diagonal_certified=tuple(proofs))


def all_principal_matrices(a: GeneratorVector, cap: int = 10000) -> PrincipalEnumeration:
    """Every principal matrix of a, as the product of per-row choices.

    Row i ranges over all representations of c_i*a_i by the other
    generators.  The product is emitted in lexicographic order of the row
    choices and truncated at cap (with the flag set) if it is larger.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    _check_usable(a)
    n = len(a)
    row_reps: list[list[Representation]] = []
    exponents: list[int] = []
    truncated = False
    for i in range(1, n + 1):
        c = critical_exponent(a, i)
        reps, row_truncated = representations(a.without(i), c * a.values[i - 1], cap=cap)
        truncated = truncated or row_truncated
        row_reps.append(reps)
        exponents.append(c)
    matrices: list[PrincipalMatrix] = []
    proofs = tuple(
        DiagonalProof(row=i, exponent=exponents[i - 1], smaller_multiples_checked=exponents[i - 1] - 1)
        for i in range(1, n + 1)
    )
    for choice in itertools.product(*row_reps):
        if len(matrices) == cap:
            truncated = True
            break
        rows = tuple(
            _row_from_representation(n, i, exponents[i - 1], choice[i - 1])
            for i in range(1, n + 1)
        )
        base = PseudoPrincipalMatrix(matrix=IntMatrix(rows), witness=a.values, strict=True)
        matrices.append(PrincipalMatrix(base=base, generators=a, diagonal_certified=proofs))
    return PrincipalEnumeration(matrices=tuple(matrices), truncated=truncated)


def validate_pseudo(
    M: IntMatrix, strict: bool = True
) -> Union[PseudoPrincipalMatrix, PseudoRejection]:
    """Check the sign pattern and search for a positive kernel witness.

    Rejection is a value, not an exception: the reason names the offending
    entry for sign violations, or reports the missing positive kernel.
    With strict=True diagonal entries must be <= -2; lenient allows -1.
    """
    if not M.is_square:
        raise ValueError("pseudo principal matrices are square")
    n = M.n_rows
    diag_max = -2 if strict else -1
    for i in range(n):
        for j in range(n):
            v = M.rows[i][j]
            if i == j:
                if v > diag_max:
                    kind = "non-negative" if v >= 0 else "-1 not allowed in strict mode"
                    return PseudoRejection(
                        reason=f"sign-pattern violation at ({i + 1},{i + 1}): diagonal {v} ({kind})",
                        position=(i + 1, i + 1),
                    )
            elif v < 0:
                return PseudoRejection(
                    reason=f"sign-pattern violation at ({i + 1},{j + 1}): off-diagonal {v} < 0",
                    position=(i + 1, j + 1),
                )
    witness = find_positive_kernel(M)
    if witness is None:
        return PseudoRejection(reason="no positive kernel vector")
    return PseudoPrincipalMatrix(matrix=M, witness=witness, strict=strict)


def _as_matrix(M: Union[IntMatrix, PseudoPrincipalMatrix, PrincipalMatrix]) -> IntMatrix:
    if isinstance(M, PrincipalMatrix):
        return M.base.matrix
    if isinstance(M, PseudoPrincipalMatrix):
        return M.matrix
    return M


def recover_generators(M: Union[IntMatrix, PseudoPrincipalMatrix, PrincipalMatrix]) -> tuple[int, ...]:
    """Recover the unique positive primitive kernel vector of a rank n-1 matrix.

    Taken from a nonzero adjugate column: the columns of the adjugate of a
    rank n-1 matrix all lie in its kernel.  The gcd is factored out and
    signs flipped positive.  Returns a plain tuple because the recovered
    vector can have repeated entries (for instance all ones), which a
    GeneratorVector would reject.
    """
    mat = _as_matrix(M)
    if not mat.is_square:
        raise ValueError("recovery requires a square matrix")
    n = mat.n_rows
    r = rank(mat)
    if r < n - 1:
        raise ValueError(f"recovery not unique: rank {r} < {n - 1}, kernel dimension {n - r}")
    if r == n:
        raise ValueError("matrix is nonsingular: the kernel is trivial")
    adj = adjugate(mat)
    col = None
    for j in range(n):
        candidate = tuple(adj.rows[i][j] for i in range(n))
        if any(candidate):
            col = candidate
            break
    assert col is not None, "rank n-1 matrix must have a nonzero adjugate"
    g = 0
    for x in col:
        g = math.gcd(g, x)
    vec = tuple(x // g for x in col)
    if vec[next(i for i, x in enumerate(vec) if x)] < 0:
        vec = tuple(-x for x in vec)
    if any(x <= 0 for x in vec):
        raise ValueError("kernel vector is not strictly positive; no generator recovery")
    assert all(x == 0 for x in mat.mul_vector(vec))
    return vec


@dataclass(frozen=True)
class PrincipalityReport:
    ok: bool
    reason: Optional[str] = None
    row: Optional[int] = None
    true_exponent: Optional[int] = None
    claimed_exponent: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok


def is_principal(
    M: Union[IntMatrix, PseudoPrincipalMatrix, PrincipalMatrix],
    a: Optional[Union[GeneratorVector, Sequence[int]]] = None,
) -> PrincipalityReport:
    """Is M the principal matrix of a (jointly)?

    With a omitted the witness is recovered from the matrix, which needs
    rank n-1; below that the caller must supply a, since principality is a
    property of the pair.  The explanation names the first failing row and
    the true critical exponent.
    """
    mat = _as_matrix(M)
    if not mat.is_square:
        raise ValueError("principality check requires a square matrix")
    n = mat.n_rows
    if isinstance(M, IntMatrix):
        checked = validate_pseudo(mat, strict=False)
        if isinstance(checked, PseudoRejection):
            return PrincipalityReport(ok=False, reason=checked.reason)
    if a is None:
        vec = recover_generators(mat)
    else:
        vec = tuple(a.values) if isinstance(a, GeneratorVector) else tuple(int(x) for x in a)
        if len(vec) != n:
            raise ValueError("witness length does not match matrix size")
    if any(x != 0 for x in mat.mul_vector(vec)):
        raise ValueError("matrix does not annihilate the witness vector")
    if len(set(vec)) != len(vec):
        return PrincipalityReport(
            ok=False, reason="witness has repeated entries: not minimally generating"
        )
    gens = GeneratorVector(vec)
    if not is_minimal_generating(gens):
        for i in range(1, n + 1):
            if contains(gens.without(i), vec[i - 1]):
                return PrincipalityReport(
                    ok=False,
                    reason=f"generator {vec[i - 1]} is redundant: not minimally generating",
                )
    for i in range(1, n + 1):
        claimed = -mat.rows[i - 1][i - 1]
        true_c = critical_exponent(gens, i)
        if claimed != true_c:
            return PrincipalityReport(
                ok=False,
                reason=f"row {i}: c_{i} = {true_c} < {claimed}",
                row=i,
                true_exponent=true_c,
                claimed_exponent=claimed,
            )
    return PrincipalityReport(ok=True)
