"""Exchange properties of base sets, the sorting operator, and the
balancing rewrite along symmetric exchanges.

Four exchange notions, ordered by strength on equal-modulus sets:
strong (every candidate swap lands in B) implies base exchange (every
deficit coordinate has some repair swap) implies weak (some swap exists
per pair).  The symmetric property additionally requires the mirrored
swap on the partner vector; every genuine base set satisfies it.
"""

from __future__ import annotations

from enum import Enum

from .core import Vector, Verdict, exchange_step, modulus, sorted_vectors
from .polymatroid import BaseSet, is_base_set


class ExchangeMode(Enum):
    WEAK = "weak"
    BASE = "base"
    STRONG = "strong"
    SYMMETRIC = "symmetric"


def exchange_property(B: BaseSet, mode: ExchangeMode) -> Verdict:
    """Decide the selected exchange property, with a counterexample.

    Witness shapes: weak -> (u, v); base -> (u, v, i); strong ->
    (u, v, i, j); symmetric -> (u, v, i).  All indices 1-based,
    lexicographically smallest violation first.
    """
    if mode is ExchangeMode.BASE:
        return is_base_set(B)
    if mode is ExchangeMode.SYMMETRIC:
        return verify_symmetric_exchange(B)
    ordered = sorted_vectors(B.vectors)
    vs = B.vectors
    n = B.n
    if mode is ExchangeMode.STRONG:
        for u in ordered:
            for v in ordered:
                if u == v:
                    continue
                for i in range(n):
                    if u[i] > v[i]:
                        for j in range(n):
                            if u[j] < v[j] and exchange_step(u, i + 1, j + 1) not in vs:
                                return Verdict(False, (u, v, i + 1, j + 1))
        return Verdict(True)
    if mode is ExchangeMode.WEAK:
        for u in ordered:
            for v in ordered:
                if u == v:
                    continue
                if not any(
                    u[i] > v[i] and u[j] < v[j] and exchange_step(u, i + 1, j + 1) in vs
                    for i in range(n)
                    for j in range(n)
                ):
                    return Verdict(False, (u, v))
        return Verdict(True)
    raise ValueError(f"unknown exchange mode {mode!r}")


def symmetric_exchange_witness(B: BaseSet, u: Vector, v: Vector, i: int) -> int | None:
    """Smallest j repairing coordinate i on both sides at once.

    Requires u, v in B and u(i) > v(i).  Returns j with u(j) < v(j) such
    that u - e_i + e_j and v - e_j + e_i both lie in B, or None; a None
    certifies that B is not the base set of a discrete polymatroid.
    """
    if u not in B.vectors or v not in B.vectors:
        raise ValueError("u and v must belong to the base set")
    if not 1 <= i <= B.n:
        raise ValueError(f"index {i} outside ground set [{B.n}]")
    if u[i - 1] <= v[i - 1]:
        raise ValueError(f"need u({i}) > v({i}), got {u[i - 1]} <= {v[i - 1]}")
    for j in range(1, B.n + 1):
        if u[j - 1] < v[j - 1]:
            if exchange_step(u, i, j) in B.vectors and exchange_step(v, j, i) in B.vectors:
                return j
    return None


def verify_symmetric_exchange(B: BaseSet) -> Verdict:
    """Every (u, v, i) with u(i) > v(i) must admit a two-sided swap."""
    ordered = sorted_vectors(B.vectors)
    for u in ordered:
        for v in ordered:
            if u == v:
                continue
            for i in range(B.n):
                if u[i] > v[i] and symmetric_exchange_witness(B, u, v, i + 1) is None:
                    return Verdict(False, (u, v, i + 1))
    return Verdict(True)


# --- sorting ----------------------------------------------------------------


def sort_pair(u: Vector, v: Vector) -> tuple[Vector, Vector]:
    """Merge the two index multisets and deal them out alternately.

    The combined multiset of u + v is listed in nondecreasing index
    order; the odd positions rebuild the first output, the even
    positions the second.  Idempotent, and preserves the sum u + v.
    """
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    if modulus(u) != modulus(v):
        raise ValueError("sorting requires equal moduli")
    a = [0] * len(u)
    b = [0] * len(u)
    seen = 0
    for idx in range(len(u)):
        c = u[idx] + v[idx]
        odd = (c + 1) // 2 if seen % 2 == 0 else c // 2
        a[idx] = odd
        b[idx] = c - odd
        seen += c
    return tuple(a), tuple(b)


def is_sorted(u: Vector, v: Vector) -> bool:
    """Prefix test for sorted pairs: every prefix of v trails the same
    prefix of u by at most one and never exceeds it."""
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    if modulus(u) != modulus(v):
        raise ValueError("sortedness requires equal moduli")
    pu = pv = 0
    for a, b in zip(u, v):
        pu += a
        pv += b
        if not pu - 1 <= pv <= pu:
            return False
    return True


def sign_sequence(w: Vector) -> str:
    """Signs of the nonzero entries of a {-1, 0, 1} vector, left to right."""
    for e in w:
        if e not in (-1, 0, 1):
            raise ValueError(f"entries must lie in {{-1, 0, 1}}, got {e}")
    return "".join("+" if e == 1 else "-" for e in w if e)


def is_sortable(B: BaseSet) -> Verdict:
    """Is B closed under the sorting operator?  Witness: the first pair
    whose sorted image leaves B."""
    ordered = sorted_vectors(B.vectors)
    vs = B.vectors
    for a in range(len(ordered)):
        for b in range(a, len(ordered)):
            u, v = ordered[a], ordered[b]
            s, t = sort_pair(u, v)
            if s not in vs or t not in vs:
                return Verdict(False, (u, v))
    return Verdict(True)


# --- balancing rewrite ------------------------------------------------------


def rewrite_balanced(
    seq: list[Vector] | tuple[Vector, ...], B: BaseSet
) -> tuple[list[Vector], list[tuple[Vector, Vector, int, int]]]:
    """Even out a tuple of bases by symmetric exchanges.

    Repeatedly picks the lexicographically smallest (i, k, l) with the
    k-th and l-th vectors differing by at least 2 in coordinate i and
    applies a two-sided swap from :func:`symmetric_exchange_witness`.
    The result has all pairwise coordinate spreads at most 1 and the
    same vector sum; the applied moves are logged as (u, v, i, j)
    quadruples.  The spread potential at the exchanged coordinate
    strictly decreases each step, so the loop terminates.
    """
    vs = [tuple(v) for v in seq]
    for v in vs:
        if v not in B.vectors:
            raise ValueError(f"{v} is not a member of the base set")
    n = B.n
    moves: list[tuple[Vector, Vector, int, int]] = []
    while True:
        pivot = None
        for i in range(n):
            for k in range(len(vs)):
                for l in range(k + 1, len(vs)):
                    if abs(vs[k][i] - vs[l][i]) >= 2:
                        pivot = (i, k, l)
                        break
                if pivot:
                    break
            if pivot:
                break
        if pivot is None:
            return vs, moves
        i, k, l = pivot
        if vs[k][i] > vs[l][i]:
            hi, lo = k, l
        else:
            hi, lo = l, k
        u, v = vs[hi], vs[lo]
        j = symmetric_exchange_witness(B, u, v, i + 1)
        if j is None:
            raise ValueError(
                "input violates the symmetric exchange property -- not a valid base set"
            )
        vs[hi] = exchange_step(u, i + 1, j)
        vs[lo] = exchange_step(v, j, i + 1)
        moves.append((u, v, i + 1, j))
