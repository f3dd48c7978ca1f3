"""Independent reference implementations used only to check the library.

These stay deliberately naive: cofactor expansion for determinants,
exhaustive coefficient enumeration for semigroup membership, grid search
for positive kernel vectors.  They must not share code with the package.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def det_cofactor(rows) -> int:
    """Determinant by first-row cofactor expansion."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j]:
            sub = [list(r[:j]) + list(r[j + 1 :]) for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * det_cofactor(sub)
    return total


def submatrix(rows, ridx, cidx):
    return [[rows[i][j] for j in cidx] for i in ridx]


def minor_oracle(rows, ridx, cidx) -> int:
    return det_cofactor(submatrix(rows, ridx, cidx))


def all_representations(values, x):
    """Every coefficient tuple over values summing to x, lex order."""
    out = []

    def rec(pos, remaining, prefix):
        if pos == len(values):
            if remaining == 0:
                out.append(tuple(prefix))
            return
        v = values[pos]
        for c in range(remaining // v + 1):
            rec(pos + 1, remaining - c * v, prefix + [c])

    rec(0, x, [])
    return out


def member_oracle(values, x) -> bool:
    """Membership by bounded exhaustive enumeration."""

    def rec(pos, remaining):
        if remaining == 0:
            return True
        if pos == len(values):
            return False
        v = values[pos]
        for c in range(remaining // v + 1):
            if rec(pos + 1, remaining - c * v):
                return True
        return False

    return rec(0, x)


def positive_kernel_grid(basis, span=6) -> bool:
    """Does some rational combination of the basis have all entries > 0?

    Searches integer coefficient grids; complete enough for the small
    kernels exercised in tests (dimension at most 3).
    """
    if not basis:
        return False
    n = len(basis[0])
    for coeffs in itertools.product(range(-span, span + 1), repeat=len(basis)):
        vec = [sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(n)]
        if all(x > 0 for x in vec):
            return True
    return False


def rank_oracle(rows) -> int:
    """Rank over the rationals by plain Gaussian elimination on Fractions."""
    a = [[Fraction(x) for x in row] for row in rows]
    m = len(a)
    n = len(a[0]) if a else 0
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
        r += 1
        if r == m:
            break
    return r
