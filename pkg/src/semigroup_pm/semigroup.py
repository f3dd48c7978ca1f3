"""Numerical semigroup arithmetic: membership, representations, minimality.

A generator list is kept in user order; theorems that need "after a
reordering" make the permutation explicit instead of sorting silently.
Membership over [0, x] is decided with a reachability bitset (one Python
integer), which keeps repeated queries cheap at desk scale.

A representation of x over generators (a_1, .., a_n) is a coefficient
tuple (k_1, .., k_n) of non-negative integers with sum k_j a_j = x.
Representations are plain tuples here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

__all__ = [
    "GeneratorVector",
    "Representation",
    "normalize",
    "contains",
    "representations",
    "canonical_representation",
    "is_minimal_generating",
]

Representation = tuple[int, ...]


@dataclass(frozen=True)
class GeneratorVector:
    """Positive integer generators with their cached gcd.

    Duplicates are a construction error: they break minimal generation and
    the definition of the critical exponents.  The vector generates a
    numerical semigroup exactly when gcd == 1.
    """

    values: tuple[int, ...]
    gcd: int = 0  # derived; filled in __post_init__

    def __post_init__(self) -> None:
        vals = tuple(int(v) for v in self.values)
        if not vals:
            raise ValueError("generator list must be nonempty")
        if any(v < 1 for v in vals):
            raise ValueError("generators must be positive integers")
        if len(set(vals)) != len(vals):
            dup = next(v for v in vals if vals.count(v) > 1)
            raise ValueError(f"duplicate generator {dup}")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "gcd", math.gcd(*vals))

    @classmethod
    def of(cls, *values: int) -> "GeneratorVector":
        return cls(tuple(values))

    @property
    def is_numerical(self) -> bool:
        return self.gcd == 1

    def without(self, i: int) -> "GeneratorVector":
        """Drop the i-th generator (1-based)."""
        if not 1 <= i <= len(self.values):
            raise ValueError(f"index {i} out of range 1..{len(self.values)}")
        if len(self.values) == 1:
            raise ValueError("cannot drop the only generator")
        return GeneratorVector(self.values[: i - 1] + self.values[i:])

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self.values) + "}"


def normalize(a: GeneratorVector) -> tuple[int, GeneratorVector]:
    """Split off the gcd: returns (g, primitive) with a = g * primitive."""
    g = a.gcd
    if g == 1:
        return 1, a
    return g, GeneratorVector(tuple(v // g for v in a.values))


_MEMBERSHIP_LIMIT = 1 << 26  # bitset size guard, ~8 MB; far beyond desk scale


@lru_cache(maxsize=4096)
def _reachable_bits(values: tuple[int, ...], limit: int) -> int:
    """Bitset of all sums of the values that lie in [0, limit].

    Bit x is set iff x is a non-negative integer combination.  Closure
    under adding v is computed by doubling shifts, so each value costs
    O(log(limit/v)) big-integer operations.
    """
    if limit > _MEMBERSHIP_LIMIT:
        raise ValueError(
            f"membership target {limit} is too large for the reachability table "
            f"(cap {_MEMBERSHIP_LIMIT}); generators of this magnitude are out of scope"
        )
    mask = (1 << (limit + 1)) - 1
    bits = 1
    for v in values:
        if v <= limit:
            step = v
            while step <= limit:
                bits |= (bits << step) & mask
                step <<= 1
    return bits


def contains(gens: GeneratorVector, x: int) -> bool:
    """Is x a non-negative integer combination of the generators?"""
    if x < 0:
        raise ValueError("membership is defined for non-negative integers")
    if x == 0:
        return True
    return bool(_reachable_bits(gens.values, x) >> x & 1)


def _suffix_bits(values: tuple[int, ...], limit: int) -> list[int]:
    """Reachability bitsets for every suffix of the generator list."""
    out = [1]  # empty suffix reaches only 0
    mask = (1 << (limit + 1)) - 1
    for v in reversed(values):
        bits = out[-1]
        if v <= limit:
            step = v
            while step <= limit:
                bits |= (bits << step) & mask
                step <<= 1
        out.append(bits)
    out.reverse()
    return out


def representations(
    gens: GeneratorVector, x: int, cap: Optional[int] = None
) -> tuple[list[Representation], bool]:
    """All representations of x, lexicographically smallest first.

    Returns (reps, truncated).  The list is complete when the total number
    of representations is at most cap; otherwise exactly cap of them are
    returned and truncated is True.  cap=None means no limit.
    """
    if x < 0:
        raise ValueError("target must be a non-negative integer")
    if cap is not None and cap < 1:
        raise ValueError("cap must be at least 1")
    vals = gens.values
    n = len(vals)
    suffix = _suffix_bits(vals, x)
    out: list[Representation] = []
    truncated = False

    def rec(pos: int, remaining: int, prefix: list[int]) -> None:
        nonlocal truncated
        if truncated:
            return
        if pos == n:
            if remaining == 0:
                if cap is not None and len(out) == cap:
                    truncated = True
                else:
                    out.append(tuple(prefix))
            return
        if not (suffix[pos] >> remaining) & 1:
            return
        v = vals[pos]
        for coeff in range(remaining // v + 1):
            rec(pos + 1, remaining - coeff * v, prefix + [coeff])
            if truncated:
                return

    rec(0, x, [])
    return out, truncated


def canonical_representation(gens: GeneratorVector, x: int) -> Optional[Representation]:
    """Lexicographically smallest representation of x, or None.

    Coefficient tuples compare left to right in generator order, so the
    canonical pick puts as little weight as possible on early generators.
    """
    if x < 0:
        raise ValueError("target must be a non-negative integer")
    vals = gens.values
    n = len(vals)
    suffix = _suffix_bits(vals, x)
    coeffs: list[int] = []
    remaining = x
    for pos in range(n):
        if not (suffix[pos] >> remaining) & 1:
            return None
        v = vals[pos]
        for coeff in range(remaining // v + 1):
            rest = remaining - coeff * v
            if (suffix[pos + 1] >> rest) & 1:
                coeffs.append(coeff)
                remaining = rest
                break
        else:
            return None
    return tuple(coeffs) if remaining == 0 else None


def is_minimal_generating(a: GeneratorVector) -> bool:
    """True iff no generator lies in the monoid generated by the others."""
    if len(a) == 1:
        return True
    for i in range(1, len(a) + 1):
        if contains(a.without(i), a.values[i - 1]):
            return False
    return True
