"""Integer-vector and ground-set primitives shared by every other module.

Vectors are plain tuples of nonnegative ints; subsets of the ground set
[n] = {1, ..., n} are bitmasks with bit i-1 standing for element i.  All
indices in public signatures and witnesses are 1-based.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable

Vector = tuple[int, ...]

DEFAULT_MAX_POINTS = 10**6


class SizeCapExceeded(Exception):
    """An enumeration would exceed the configured size cap."""


def max_points() -> int:
    """Enumeration size cap; override with POLYMAT_MAX_POINTS."""
    raw = os.environ.get("POLYMAT_MAX_POINTS")
    return int(raw) if raw else DEFAULT_MAX_POINTS


def check_cap(count: int, what: str) -> None:
    cap = max_points()
    if count > cap:
        raise SizeCapExceeded(f"{what} needs {count} points, cap is {cap}")


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decision procedure, with a counterexample on failure.

    Truthy iff the property holds.  ``witness`` is the lexicographically
    smallest offending tuple the scan found (vectors as tuples, indices
    1-based), or None when the property holds.
    """

    holds: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.holds


def as_vector(entries: Iterable[int]) -> Vector:
    """Validate and freeze a nonnegative integer vector."""
    u = tuple(entries)
    if not u:
        raise ValueError("vector must have at least one entry")
    for e in u:
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise ValueError(f"vector entries must be nonnegative integers, got {e!r}")
    return u


def zero(n: int) -> Vector:
    return (0,) * n


def unit(n: int, i: int) -> Vector:
    """The i-th canonical basis vector of Z^n (i is 1-based)."""
    if not 1 <= i <= n:
        raise ValueError(f"index {i} outside ground set [{n}]")
    return tuple(1 if k == i - 1 else 0 for k in range(n))


def modulus(u: Vector) -> int:
    """Sum of the entries of u."""
    return sum(u)


def _check_same_n(u: Vector, v: Vector) -> None:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")


def join(u: Vector, v: Vector) -> Vector:
    """Componentwise maximum."""
    _check_same_n(u, v)
    return tuple(map(max, u, v))


def meet(u: Vector, v: Vector) -> Vector:
    """Componentwise minimum."""
    _check_same_n(u, v)
    return tuple(map(min, u, v))


def join_meet(u: Vector, v: Vector) -> tuple[Vector, Vector]:
    return join(u, v), meet(u, v)


def distance(u: Vector, v: Vector) -> int:
    """Half the l1-distance; defined for vectors of equal modulus."""
    _check_same_n(u, v)
    if sum(u) != sum(v):
        raise ValueError("distance requires equal moduli")
    return sum(abs(a - b) for a, b in zip(u, v)) // 2


def eval_on_subset(u: Vector, mask: int) -> int:
    """u(A) = sum of the entries of u indexed by the subset A (a bitmask)."""
    n = len(u)
    if not 0 <= mask < (1 << n):
        raise ValueError(f"mask {mask} outside range for ground set [{n}]")
    total = 0
    m = mask
    while m:
        low = m & -m
        total += u[low.bit_length() - 1]
        m ^= low
    return total


def exchange_step(u: Vector, i: int, j: int) -> Vector:
    """u - e_i + e_j (1-based indices); requires u(i) > 0 and i != j."""
    n = len(u)
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"indices ({i},{j}) outside ground set [{n}]")
    if i == j:
        raise ValueError("exchange indices must differ")
    if u[i - 1] == 0:
        raise ValueError(f"entry {i} of {u} is zero, cannot decrease")
    w = list(u)
    w[i - 1] -= 1
    w[j - 1] += 1
    return tuple(w)


# --- ground subsets as bitmasks -------------------------------------------


def subset_mask(elements: Iterable[int], n: int) -> int:
    """Bitmask of a 1-based element collection inside [n]."""
    mask = 0
    for e in elements:
        if not (isinstance(e, int) and 1 <= e <= n):
            raise ValueError(f"element {e!r} outside ground set [{n}]")
        mask |= 1 << (e - 1)
    return mask


def subset_elements(mask: int) -> tuple[int, ...]:
    """1-based elements of a bitmask, ascending."""
    out = []
    m = mask
    while m:
        low = m & -m
        out.append(low.bit_length())
        m ^= low
    return tuple(out)


def subset_size(mask: int) -> int:
    return mask.bit_count()


def subsets(n: int) -> range:
    """All bitmasks over [n], from the empty set upwards."""
    return range(1 << n)


def sorted_vectors(vectors: Iterable[Vector]) -> tuple[Vector, ...]:
    """Canonical (lexicographic) ordering used for deterministic output."""
    return tuple(sorted(vectors))
