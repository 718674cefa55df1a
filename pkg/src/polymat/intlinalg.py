"""Exact linear algebra over the integers and rationals.

Everything here runs on Python ints and fractions.Fraction, so there is
no floating point anywhere: affine ranks, lattice membership and convex
hull membership are all decided exactly.  Sizes are desk scale, so the
naive algorithms below are plenty.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix, by exact Gaussian elimination."""
    mat = [[Fraction(x) for x in row] for row in rows if any(row)]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    col = 0
    while rank < len(mat) and col < ncols:
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        prow = mat[rank]
        inv = prow[col]
        for r in range(rank + 1, len(mat)):
            if mat[r][col]:
                factor = mat[r][col] / inv
                mat[r] = [a - factor * b for a, b in zip(mat[r], prow)]
        rank += 1
        col += 1
    return rank


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine span of a point set (-1 for the empty set)."""
    pts = list(points)
    if not pts:
        return -1
    base = pts[0]
    return integer_rank([[a - b for a, b in zip(p, base)] for p in pts[1:]])


def lattice_basis(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Integer echelon basis of the lattice generated by the given rows.

    Row-style Hermite reduction: pivots sit on strictly increasing
    columns, each pivot is positive, rows above a pivot are reduced
    modulo it.
    """
    mat = [list(row) for row in rows if any(row)]
    if not mat:
        return ()
    ncols = len(mat[0])
    basis: list[list[int]] = []
    row_at = 0
    for col in range(ncols):
        # Euclid on the current column until one nonzero entry remains.
        while True:
            live = [r for r in range(row_at, len(mat)) if mat[r][col]]
            if len(live) <= 1:
                break
            live.sort(key=lambda r: abs(mat[r][col]))
            small, other = live[0], live[1]
            q = mat[other][col] // mat[small][col]
            mat[other] = [a - q * b for a, b in zip(mat[other], mat[small])]
        live = [r for r in range(row_at, len(mat)) if mat[r][col]]
        if not live:
            continue
        r = live[0]
        mat[row_at], mat[r] = mat[r], mat[row_at]
        if mat[row_at][col] < 0:
            mat[row_at] = [-a for a in mat[row_at]]
        # reduce earlier rows modulo the new pivot
        piv = mat[row_at][col]
        for prev in basis:
            q = prev[col] // piv
            if q:
                for c in range(ncols):
                    prev[c] -= q * mat[row_at][c]
        basis.append(mat[row_at])
        row_at += 1
    return tuple(tuple(r) for r in basis)


def in_lattice(basis: Sequence[Sequence[int]], x: Sequence[int]) -> bool:
    """Membership of x in the row lattice spanned by an echelon basis."""
    rem = list(x)
    for row in basis:
        col = next(c for c, a in enumerate(row) if a)
        if rem[col] % row[col]:
            return False
        q = rem[col] // row[col]
        if q:
            rem = [a - q * b for a, b in zip(rem, row)]
    return not any(rem)


def in_scaled_hull(points: Sequence[Sequence[int]], target: Sequence[int], scale: int) -> bool:
    """Decide target in scale * conv(points) exactly.

    Equivalent to feasibility of sum(l_p * p) = target, sum(l_p) = scale,
    l >= 0, settled by a phase-one simplex over Fraction with Bland's
    rule (no cycling, no rounding).
    """
    if scale <= 0:
        raise ValueError("scale must be positive")
    pts = list(points)
    if not pts:
        return False
    ncons = len(target) + 1
    nvars = len(pts)
    # rows: one per coordinate constraint plus the total-weight constraint
    rows = []
    for c in range(len(target)):
        rows.append([Fraction(p[c]) for p in pts] + [Fraction(target[c])])
    rows.append([Fraction(1)] * nvars + [Fraction(scale)])
    for row in rows:
        if row[-1] < 0:
            for c in range(len(row)):
                row[c] = -row[c]
    # artificial variable i is basic in row i; objective = sum of artificials
    basis = [nvars + i for i in range(ncons)]
    obj = [sum(rows[r][c] for r in range(ncons)) for c in range(nvars + 1)]

    while True:
        enter = next((c for c in range(nvars) if obj[c] > 0), None)
        if enter is None:
            break
        ratios = [
            (rows[r][-1] / rows[r][enter], basis[r], r)
            for r in range(ncons)
            if rows[r][enter] > 0
        ]
        if not ratios:  # unbounded cannot happen in phase one
            break
        _, _, leave = min(ratios)
        piv = rows[leave][enter]
        rows[leave] = [a / piv for a in rows[leave]]
        for r in range(ncons):
            if r != leave and rows[r][enter]:
                f = rows[r][enter]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[leave])]
        f = obj[enter]
        obj = [a - f * b for a, b in zip(obj, rows[leave])]
        basis[leave] = enter

    return obj[-1] == 0
