"""Discrete polymatroids: validation, bases, rank functions, hull checks
and the structural operations (truncation, contraction, lift, sum,
greedy vertices).

A discrete polymatroid is a finite downward-closed set P of nonnegative
integer vectors such that any u, v in P with |v| > |u| admit an
augmentation step u + e_i in P staying below the join u v v.  Its bases
are the maximal vectors; they share a common modulus, the rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Iterator

from .core import (
    Vector,
    Verdict,
    as_vector,
    check_cap,
    eval_on_subset,
    modulus,
    sorted_vectors,
    subsets,
    zero,
)


@dataclass(frozen=True)
class VectorSet:
    """A finite nonempty set of integer vectors on a common ground set."""

    n: int
    vectors: frozenset

    def __iter__(self) -> Iterator[Vector]:
        return iter(sorted_vectors(self.vectors))

    def __len__(self) -> int:
        return len(self.vectors)

    def __contains__(self, u) -> bool:
        return u in self.vectors


@dataclass(frozen=True)
class BaseSet:
    """A finite nonempty set of integer vectors of equal modulus."""

    n: int
    vectors: frozenset
    modulus: int

    def __iter__(self) -> Iterator[Vector]:
        return iter(sorted_vectors(self.vectors))

    def __len__(self) -> int:
        return len(self.vectors)

    def __contains__(self, u) -> bool:
        return u in self.vectors


@dataclass(frozen=True)
class RankFunction:
    """Integer set function on 2^[n], stored by bitmask."""

    n: int
    values: tuple

    def __call__(self, mask: int) -> int:
        return self.values[mask]


@dataclass(frozen=True)
class DiscretePolymatroid:
    """Validated discrete polymatroid with cached rank and bases.

    Build through :func:`discrete_polymatroid`; the factory checks
    downward closure and the exchange axiom and rejects anything else.
    """

    n: int
    points: frozenset
    rank: int
    bases: frozenset

    def __iter__(self) -> Iterator[Vector]:
        return iter(sorted_vectors(self.points))

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, u) -> bool:
        return u in self.points

    @property
    def point_set(self) -> VectorSet:
        return VectorSet(self.n, self.points)

    @property
    def base_set(self) -> BaseSet:
        return BaseSet(self.n, self.bases, self.rank)


def vector_set(vectors: Iterable, n: int | None = None) -> VectorSet:
    vs = frozenset(as_vector(v) for v in vectors)
    if not vs:
        raise ValueError("vector set must be nonempty")
    lengths = {len(v) for v in vs}
    if len(lengths) > 1:
        raise ValueError(f"vectors have mixed lengths {sorted(lengths)}")
    m = lengths.pop()
    if n is not None and n != m:
        raise ValueError(f"declared ground set [{n}] but vectors have length {m}")
    return VectorSet(m, vs)


def base_set(vectors: Iterable, n: int | None = None) -> BaseSet:
    vs = vector_set(vectors, n)
    mods = {modulus(v) for v in vs.vectors}
    if len(mods) > 1:
        raise ValueError(f"base set requires equal moduli, got {sorted(mods)}")
    return BaseSet(vs.n, vs.vectors, mods.pop())


def rank_function_from_values(values: Iterable[int], n: int) -> RankFunction:
    vals = tuple(values)
    if len(vals) != 1 << n:
        raise ValueError(f"rank function on [{n}] needs {1 << n} values, got {len(vals)}")
    for v in vals:
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"rank values must be nonnegative integers, got {v!r}")
    return RankFunction(n, vals)


# --- construction and validation -------------------------------------------


def downward_closure(S: VectorSet) -> VectorSet:
    """All integral subvectors of members of S."""
    out: set = set()
    for u in S:
        for v in product(*(range(e + 1) for e in u)):
            out.add(v)
        check_cap(len(out), "downward closure")
    return VectorSet(S.n, frozenset(out))


def maximal_vectors(S: VectorSet) -> tuple[Vector, ...]:
    """Vectors of S not strictly dominated by another member."""
    vs = S.vectors
    out = []
    for u in S:
        if not any(u != v and all(a <= b for a, b in zip(u, v)) for v in vs):
            out.append(u)
    return tuple(out)


def is_discrete_polymatroid(S: VectorSet) -> Verdict:
    """Decide the two axioms, returning the first violation found.

    Witnesses: ("subvector", u, v) with v an immediate subvector of u
    missing from S, or ("exchange", u, v) for a pair admitting no
    augmentation step.
    """
    vs = S.vectors
    ordered = sorted_vectors(vs)
    for u in ordered:
        for i in range(S.n):
            if u[i] > 0:
                v = u[:i] + (u[i] - 1,) + u[i + 1 :]
                if v not in vs:
                    return Verdict(False, ("subvector", u, v))
    for u in ordered:
        mu = modulus(u)
        for v in ordered:
            if modulus(v) <= mu:
                continue
            if not any(u[i] < v[i] and u[:i] + (u[i] + 1,) + u[i + 1 :] in vs for i in range(S.n)):
                return Verdict(False, ("exchange", u, v))
    return Verdict(True)


def _validate_layers(vs: frozenset, n: int) -> tuple | None:
    """Fast whole-set equivalent of the polymatroid axioms.

    Downward closure is checked one step at a time, and the exchange
    axiom only between adjacent modulus layers; both reductions are
    equivalent for the set as a whole since subvectors stay available.
    Returns a violation tuple or None.
    """
    for u in vs:
        for i in range(n):
            if u[i] > 0:
                v = u[:i] + (u[i] - 1,) + u[i + 1 :]
                if v not in vs:
                    return ("subvector", u, v)
    layers: dict[int, list] = {}
    for u in vs:
        layers.setdefault(modulus(u), []).append(u)
    for m, layer in sorted(layers.items()):
        above = layers.get(m + 1)
        if not above:
            continue
        for u in sorted(layer):
            for v in sorted(above):
                if not any(
                    u[i] < v[i] and u[:i] + (u[i] + 1,) + u[i + 1 :] in vs for i in range(n)
                ):
                    return ("exchange", u, v)
    return None


def discrete_polymatroid(S: VectorSet | Iterable) -> DiscretePolymatroid:
    """Validate a point set and package it with its rank and bases."""
    vs = S if isinstance(S, VectorSet) else vector_set(S)
    violation = _validate_layers(vs.vectors, vs.n)
    if violation is not None:
        raise ValueError(f"not a discrete polymatroid: {violation}")
    rank = max(modulus(u) for u in vs.vectors)
    maximal = frozenset(u for u in vs.vectors if modulus(u) == rank)
    return DiscretePolymatroid(vs.n, vs.vectors, rank, maximal)


def bases(P: DiscretePolymatroid) -> BaseSet:
    """The maximal vectors of P; they all have modulus rank(P)."""
    return P.base_set


def is_base_set(B: BaseSet) -> Verdict:
    """One-sided exchange: every deficit coordinate admits a repair swap.

    Holds exactly when B is the base set of a discrete polymatroid.
    Witness: (u, v, i) with u(i) > v(i) but no j with u(j) < v(j) and
    u - e_i + e_j in B.
    """
    vs = B.vectors
    ordered = sorted_vectors(vs)
    n = B.n
    for u in ordered:
        for v in ordered:
            if u == v:
                continue
            for i in range(n):
                if u[i] > v[i]:
                    found = False
                    base = u[:i] + (u[i] - 1,) + u[i + 1 :]
                    for j in range(n):
                        if u[j] < v[j]:
                            w = base[:j] + (base[j] + 1,) + base[j + 1 :]
                            if w in vs:
                                found = True
                                break
                    if not found:
                        return Verdict(False, (u, v, i + 1))
    return Verdict(True)


# --- rank functions ---------------------------------------------------------


def rank_function(B: BaseSet) -> RankFunction:
    """rho(A) = max over bases of the mass a base puts on A."""
    n = B.n
    size = 1 << n
    best = [0] * size
    for u in B.vectors:
        sums = [0] * size
        for m in range(1, size):
            low = m & -m
            sums[m] = sums[m ^ low] + u[low.bit_length() - 1]
            if sums[m] > best[m]:
                best[m] = sums[m]
    return RankFunction(n, tuple(best))


def validate_rank_function(rho: RankFunction) -> Verdict:
    """Check rho(empty) = 0, monotonicity and submodularity.

    Witnesses: ("empty",), ("monotone", A, B) with A subset of B but
    rho(A) > rho(B), or ("submodular", A, B) violating the submodular
    inequality.  Submodularity is checked through decreasing marginal
    gains, which is equivalent and quadratic instead of exponential in
    the number of subset pairs.
    """
    if rho.values[0] != 0:
        return Verdict(False, ("empty",))
    n = rho.n
    vals = rho.values
    for mask in subsets(n):
        for i in range(n):
            bit = 1 << i
            if not mask & bit:
                if vals[mask] > vals[mask | bit]:
                    return Verdict(False, ("monotone", mask, mask | bit))
    for mask in subsets(n):
        for i in range(n):
            bi = 1 << i
            if mask & bi:
                continue
            for j in range(i + 1, n):
                bj = 1 << j
                if mask & bj:
                    continue
                if vals[mask | bi] + vals[mask | bj] < vals[mask | bi | bj] + vals[mask]:
                    return Verdict(False, ("submodular", mask | bi, mask | bj))
    return Verdict(True)


def membership(rho: RankFunction, u: Vector) -> bool:
    """u lies in the polymatroid of rho iff u(A) <= rho(A) for every A."""
    if len(u) != rho.n:
        raise ValueError(f"dimension mismatch: vector of length {len(u)} vs ground set [{rho.n}]")
    return all(eval_on_subset(u, mask) <= rho.values[mask] for mask in subsets(rho.n))


def _points_within(values: tuple, n: int) -> frozenset:
    """All u >= 0 with u(A) <= values[A] for every mask A (DFS with pruning)."""
    points: list = []
    masks_by_top = [[m for m in range(1, 1 << n) if m.bit_length() - 1 == k] for k in range(n)]
    prefix = [0] * n

    def rec(k: int) -> None:
        if k == n:
            points.append(tuple(prefix))
            check_cap(len(points), "polymatroid enumeration")
            return
        for val in range(values[1 << k] + 1):
            prefix[k] = val
            ok = True
            for m in masks_by_top[k]:
                total = 0
                mm = m
                while mm:
                    low = mm & -mm
                    total += prefix[low.bit_length() - 1]
                    mm ^= low
                if total > values[m]:
                    ok = False
                    break
            if ok:
                rec(k + 1)
        prefix[k] = 0

    rec(0)
    return frozenset(points)


def polymatroid_from_rank(rho: RankFunction) -> DiscretePolymatroid:
    """All integer vectors obeying every rank inequality of rho."""
    verdict = validate_rank_function(rho)
    if not verdict:
        raise ValueError(f"invalid rank function: {verdict.witness}")
    pts = _points_within(rho.values, rho.n)
    return discrete_polymatroid(VectorSet(rho.n, pts))


def hull_consistency(P: DiscretePolymatroid | VectorSet) -> bool:
    """Does the rank-inequality hull of the point set give back the set?

    For a genuine discrete polymatroid this always holds (the set equals
    the lattice points of its convex hull); for other downward-closed
    sets it fails and certifies the defect.
    """
    if isinstance(P, DiscretePolymatroid):
        n, pts = P.n, P.points
    else:
        n, pts = P.n, P.vectors
    best = [0] * (1 << n)
    for u in pts:
        sums = [0] * (1 << n)
        for m in range(1, 1 << n):
            low = m & -m
            sums[m] = sums[m ^ low] + u[low.bit_length() - 1]
            if sums[m] > best[m]:
                best[m] = sums[m]
    return _points_within(tuple(best), n) == pts


# --- structural operations --------------------------------------------------


def truncate(P: DiscretePolymatroid, d: int) -> DiscretePolymatroid:
    """Restrict to the vectors of modulus at most d."""
    if not 0 <= d <= P.rank:
        raise ValueError(f"truncation rank {d} outside [0, {P.rank}]")
    return discrete_polymatroid(VectorSet(P.n, frozenset(u for u in P.points if modulus(u) <= d)))


def contract(P: DiscretePolymatroid, x: Vector) -> DiscretePolymatroid:
    """Shift P by a member x: all v - x with v >= x."""
    x = as_vector(x)
    if x not in P.points:
        raise ValueError(f"{x} is not a point of the polymatroid")
    pts = frozenset(
        tuple(a - b for a, b in zip(v, x))
        for v in P.points
        if all(a >= b for a, b in zip(v, x))
    )
    return discrete_polymatroid(VectorSet(P.n, pts))


def lift(P: DiscretePolymatroid) -> BaseSet:
    """Append a slack coordinate so every point becomes a base.

    Sends u to (u, rank - |u|) on the ground set [n+1]; the image is the
    base set of a discrete polymatroid of the same rank.
    """
    d = P.rank
    vecs = frozenset(u + (d - modulus(u),) for u in P.points)
    return BaseSet(P.n + 1, vecs, d)


def polymatroid_sum(*polymatroids: DiscretePolymatroid) -> DiscretePolymatroid:
    """Pointwise sum of polymatroids; rank functions add up."""
    if not polymatroids:
        raise ValueError("polymatroid sum needs at least one summand")
    ns = {P.n for P in polymatroids}
    if len(ns) > 1:
        raise ValueError(f"dimension mismatch across summands: {sorted(ns)}")
    acc = {zero(ns.pop())}
    for P in polymatroids:
        nxt = {tuple(a + b for a, b in zip(s, p)) for s in acc for p in P.points}
        check_cap(len(nxt), "polymatroid sum")
        acc = nxt
    return discrete_polymatroid(VectorSet(polymatroids[0].n, frozenset(acc)))


def greedy_vertex(rho: RankFunction, k: int, pi: tuple[int, ...]) -> Vector:
    """Greedy point of the rank polytope along a permutation prefix.

    v(i_1) = rho({i_1}) and v(i_j) picks up the marginal gain of i_j for
    j <= k; the remaining coordinates are zero.  Always a member of the
    polymatroid of rho.
    """
    n = rho.n
    if sorted(pi) != list(range(1, n + 1)):
        raise ValueError(f"{pi} is not a permutation of [{n}]")
    if not 0 <= k <= n:
        raise ValueError(f"prefix length {k} outside [0, {n}]")
    v = [0] * n
    mask = 0
    prev = 0
    for j in range(k):
        mask |= 1 << (pi[j] - 1)
        v[pi[j] - 1] = rho.values[mask] - prev
        prev = rho.values[mask]
    return tuple(v)


def vertices(rho: RankFunction) -> VectorSet:
    """Greedy points over all prefixes and permutations, deduplicated.

    A superset of the vertex set of the rank polytope and a subset of
    its lattice points.
    """
    n = rho.n
    out = set()
    for pi in permutations(range(1, n + 1)):
        for k in range(n + 1):
            out.add(greedy_vertex(rho, k, pi))
    return VectorSet(n, frozenset(out))
