"""Exact linear algebra over the integers.

Everything here works with Python's arbitrary-precision integers; there is
no floating point anywhere.  Determinants are computed by fraction-free
(Bareiss) elimination, so intermediate values stay integral and exact.

Index conventions
-----------------
Row and column *index sets* are 1-based, matching the usual mathematical
notation Delta_I for a principal minor on rows and columns I.  Internal
storage is 0-based; ``IndexSet.zero_based()`` converts.

Augmented minors written A^{I,p}_{I,q} select the rows I (in increasing
order) followed by row p, against the columns I followed by column q.  The
extra index is appended last even when it is smaller than some element of
I; the sign of the determinant depends on that ordering, and the sign
results in :mod:`semigroup_pm.structure` rely on it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

__all__ = [
    "IntMatrix",
    "IndexSet",
    "EliminationResult",
    "minor",
    "principal_minor",
    "determinant",
    "adjugate",
    "rank",
    "eliminate",
    "sylvester_identity_check",
    "kernel_basis",
    "find_positive_kernel",
]


@dataclass(frozen=True)
class IntMatrix:
    """Dense matrix of integers, stored row-major as a tuple of tuples."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.rows or not self.rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(self.rows[0])
        for row in self.rows:
            if len(row) != width:
                raise ValueError("ragged rows: all rows must have equal length")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)))

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(min(self.n_rows, self.n_cols)))

    def mul_vector(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.n_cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.rows)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)


@dataclass(frozen=True)
class IndexSet:
    """Strictly increasing tuple of 1-based row/column indices.

    The empty set is allowed; by convention the principal minor on the
    empty set is 1 (the empty product), which keeps the elimination
    scaling law uniform at depth 1.
    """

    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        idx = self.indices
        if any(not isinstance(i, int) or i < 1 for i in idx):
            raise ValueError("indices must be positive integers (1-based)")
        if any(idx[k] >= idx[k + 1] for k in range(len(idx) - 1)):
            raise ValueError("indices must be strictly increasing and distinct")

    @classmethod
    def of(cls, *indices: int) -> "IndexSet":
        return cls.from_iterable(indices)

    @classmethod
    def from_iterable(cls, indices: Iterable[int]) -> "IndexSet":
        seq = sorted(int(i) for i in indices)
        if len(set(seq)) != len(seq):
            raise ValueError("duplicate index in index set")
        return cls(tuple(seq))

    def zero_based(self) -> tuple[int, ...]:
        return tuple(i - 1 for i in self.indices)

    def check_bounds(self, n: int) -> None:
        if self.indices and self.indices[-1] > n:
            raise ValueError(f"index {self.indices[-1]} out of range 1..{n}")

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, i: int) -> bool:
        return i in self.indices


@dataclass(frozen=True)
class EliminationResult:
    """Outcome of fraction-free forward elimination to depth r.

    ``matrix`` is the eliminated matrix: its entry (p, q) for p <= r is the
    minor on rows 1..p against columns 1..p-1 plus q, so the diagonal entry
    (p, p) is the leading principal minor of order p of the input.  Rows
    past r carry the minors on rows 1..r-1 plus p against columns 1..r-1
    plus q.  ``pivot_minors`` lists those leading principal minors of
    orders 1..r.
    """

    matrix: IntMatrix
    pivot_minors: tuple[int, ...]
    r: int


def _det(rows: list[list[int]]) -> int:
    """Determinant of a (mutable) list-of-lists by Bareiss elimination.

    Row interchanges are used for pivoting; the running sign accounts for
    them.  All divisions are exact.
    """
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k]:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * rows[-1][-1]


def selection_det(M: IntMatrix, row_idx: Sequence[int], col_idx: Sequence[int]) -> int:
    """Determinant of the submatrix picked by 0-based index lists.

    The lists are taken in the given order and may repeat an index, in
    which case the determinant is 0 (a repeated row).  This is exactly the
    generalized-minor convention used by the augmented minors A^{I,p}_{I,q}.
    """
    if len(row_idx) != len(col_idx):
        raise ValueError("row and column selections must have equal size")
    rows = [[M.rows[i][j] for j in col_idx] for i in row_idx]
    return _det(rows)


def minor(M: IntMatrix, rows: IndexSet, cols: IndexSet) -> int:
    """Determinant of the submatrix of M on the given rows and columns."""
    if len(rows) != len(cols):
        raise ValueError("minor needs equally many rows and columns")
    rows.check_bounds(M.n_rows)
    cols.check_bounds(M.n_cols)
    return selection_det(M, rows.zero_based(), cols.zero_based())


def principal_minor(M: IntMatrix, I: IndexSet) -> int:
    """Delta_I: the minor on rows and columns I.  Delta of the empty set is 1."""
    if not M.is_square:
        raise ValueError("principal minors require a square matrix")
    return minor(M, I, I)


def determinant(M: IntMatrix) -> int:
    if not M.is_square:
        raise ValueError("determinant requires a square matrix")
    return _det(M.to_lists())


def adjugate(M: IntMatrix) -> IntMatrix:
    """Adjugate (transposed cofactor matrix): Adj(M) M = M Adj(M) = det(M) I."""
    if not M.is_square:
        raise ValueError("adjugate requires a square matrix")
    n = M.n_rows
    if n < 2:
        raise ValueError("adjugate requires size at least 2")
    all_idx = list(range(n))
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        cols = all_idx[:i] + all_idx[i + 1 :]
        for j in range(n):
            rows = all_idx[:j] + all_idx[j + 1 :]
            out[i][j] = (-1) ** (i + j) * selection_det(M, rows, cols)
    return IntMatrix.from_rows(out)


def rank(M: IntMatrix) -> int:
    """Exact rank over the rationals by fraction-free elimination.

    Unlike :func:`eliminate`, this is free to search for pivots anywhere in
    the remaining rows and columns.
    """
    a = M.to_lists()
    m, n = M.n_rows, M.n_cols
    prev = 1
    r = 0
    for k in range(min(m, n)):
        piv = None
        for i in range(k, m):
            for j in range(k, n):
                if a[i][j]:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        pi, pj = piv
        if pi != k:
            a[k], a[pi] = a[pi], a[k]
        if pj != k:
            for row in a:
                row[k], row[pj] = row[pj], row[k]
        pivot = a[k][k]
        for i in range(k + 1, m):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = (pivot * a[i][j] - aik * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
        r += 1
    return r


def eliminate(M: IntMatrix, r: int) -> EliminationResult:
    """Forward fraction-free elimination to depth r, with no row interchanges.

    Requires the leading principal minors of orders 1..r-1 to be nonzero;
    the first vanishing one is named in the error.  The result satisfies,
    for s <= r, the exact scaling law

        Delta_[s](result) = product of Delta_[1](M) .. Delta_[s](M).
    """
    if r < 1 or r > min(M.n_rows, M.n_cols):
        raise ValueError(f"elimination depth r={r} out of range 1..{min(M.n_rows, M.n_cols)}")
    a = M.to_lists()
    m, n = M.n_rows, M.n_cols
    prev = 1
    for k in range(r - 1):
        pivot = a[k][k]
        if pivot == 0:
            raise ValueError(
                f"leading principal minor Delta_[{k + 1}] vanishes; "
                f"elimination to depth {r} needs Delta_[i] != 0 for i < {r}"
            )
        rk = a[k]
        for i in range(k + 1, m):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    pivots = tuple(a[i][i] for i in range(r))
    return EliminationResult(matrix=IntMatrix.from_rows(a), pivot_minors=pivots, r=r)


def sylvester_identity_check(M: IntMatrix, j: int, k: int, q: int) -> bool:
    """Check the determinant identity used inside the elimination step.

    With [j] = {1..j} and the appended-index minor convention,

        Delta_[j] * A^{[j-1],k}_{[j-1],q}
          - A^{[j-1],k}_{[j]} * A^{[j-1],j}_{[j-1],q}
          = Delta_[j-1] * A^{[j],k}_{[j],q}

    holds for every integer matrix, so this must always return True; it is
    a self-test of the minor code, not a property of special inputs.
    Repeated indices (k <= j or q <= j) make minors with duplicate rows,
    which are 0, and the identity degenerates to 0 = 0.
    """
    if not M.is_square:
        raise ValueError("identity check requires a square matrix")
    n = M.n_rows
    if j < 2 or j > n:
        raise ValueError(f"j={j} out of range 2..{n}")
    if not (1 <= k <= n and 1 <= q <= n):
        raise ValueError(f"k={k}, q={q} out of range 1..{n}")
    base = list(range(j - 1))  # rows/cols 1..j-1, 0-based
    full = list(range(j))  # rows/cols 1..j
    d_j = selection_det(M, full, full)
    d_jm1 = selection_det(M, base, base)
    t1 = selection_det(M, base + [k - 1], base + [q - 1])
    t2 = selection_det(M, base + [k - 1], full)
    t3 = selection_det(M, full, base + [q - 1])
    rhs = selection_det(M, full + [k - 1], full + [q - 1])
    return d_j * t1 - t2 * t3 == d_jm1 * rhs


def _primitive_int_vector(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers, first nonzero entry positive."""
    den = 1
    for x in v:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    first = next((x for x in ints if x != 0), 0)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def kernel_basis(M: IntMatrix) -> list[tuple[int, ...]]:
    """Basis of the rational null space as primitive integer vectors.

    Each vector has coprime entries and its first nonzero entry positive,
    so the output is deterministic.  A full-rank matrix gives [].
    """
    m, n = M.n_rows, M.n_cols
    a = [[Fraction(x) for x in row] for row in M.rows]
    pivot_cols: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivot_cols.append(c)
        r += 1
        if r == m:
            break
    free_cols = [c for c in range(n) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(pivot_cols):
            v[c] = -a[i][f]
        basis.append(_primitive_int_vector(v))
    return basis


def _normalize_constraint(c: tuple[int, ...]) -> tuple[int, ...]:
    g = 0
    for x in c:
        g = math.gcd(g, x)
    if g > 1:
        c = tuple(x // g for x in c)
    return c


def _solve_strict_positive(constraints: list[tuple[int, ...]], k: int) -> Optional[list[Fraction]]:
    """Find rational lam with c . lam > 0 for every constraint, or None.

    Fourier-Motzkin elimination on a homogeneous system of strict
    inequalities.  Variables are eliminated from index k-1 down to 0;
    infeasibility shows up as a derived all-zero constraint (0 > 0).
    The stage systems are kept for back-substitution of a witness.
    """
    stages: list[set[tuple[int, ...]]] = []
    current = {_normalize_constraint(c) for c in constraints}
    if any(all(x == 0 for x in c) for c in current):
        return None
    for t in range(k - 1, -1, -1):
        stages.append(current)
        pos = [c for c in current if c[t] > 0]
        neg = [c for c in current if c[t] < 0]
        nxt = {c for c in current if c[t] == 0}
        for p in pos:
            for mcon in neg:
                combo = tuple(
                    (-mcon[t]) * p[i] + p[t] * mcon[i] if i != t else 0 for i in range(k)
                )
                if all(x == 0 for x in combo):
                    return None
                nxt.add(_normalize_constraint(combo))
        current = nxt
    # stages[k-1-t] is the system right before eliminating variable t
    lam: list[Fraction] = [Fraction(0)] * k
    for t in range(k):
        system = stages[k - 1 - t]
        lower: Optional[Fraction] = None
        upper: Optional[Fraction] = None
        for c in system:
            coef = c[t]
            if coef == 0:
                continue
            known = sum((Fraction(c[i]) * lam[i] for i in range(t)), Fraction(0))
            bound = -known / coef
            if coef > 0:
                if lower is None or bound > lower:
                    lower = bound
            else:
                if upper is None or bound < upper:
                    upper = bound
        if lower is not None and upper is not None:
            assert lower < upper, "strict Fourier-Motzkin stage must leave an open interval"
            lam[t] = (lower + upper) / 2
        elif lower is not None:
            lam[t] = lower + 1
        elif upper is not None:
            lam[t] = upper - 1
        else:
            lam[t] = Fraction(0)
    return lam


def find_positive_kernel(M: IntMatrix) -> Optional[tuple[int, ...]]:
    """A strictly positive integer vector v with M v = 0, if one exists.

    Existence is decided exactly: positivity is a system of strict linear
    inequalities over the rational kernel, solved by Fourier-Motzkin
    elimination; a strictly positive rational solution scales to a strictly
    positive integer one.
    """
    basis = kernel_basis(M)
    if not basis:
        return None
    k = len(basis)
    n = M.n_cols
    constraints = []
    for i in range(n):
        row = tuple(b[i] for b in basis)
        if all(x == 0 for x in row):
            return None
        constraints.append(row)
    lam = _solve_strict_positive(constraints, k)
    if lam is None:
        return None
    vec = [sum((l * b[i] for l, b in zip(lam, basis)), Fraction(0)) for i in range(n)]
    out = _primitive_int_vector(vec)
    assert all(x > 0 for x in out), "solver returned a non-positive vector"
    assert all(x == 0 for x in M.mul_vector(out)), "candidate is not in the kernel"
    return out
