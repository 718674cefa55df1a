"""Independent brute-force oracles for the test suite.

Everything here is written straight from the definitions, with no reuse
of library internals: plain loops, explicit enumerations, no bitmask
tricks.  Expected values frozen into tests were produced by these.
"""

from itertools import combinations, product


def swap(u, i, j):
    """u - e_i + e_j with 0-based indices."""
    w = list(u)
    w[i] -= 1
    w[j] += 1
    return tuple(w)


def weak_failures(vectors):
    vs = set(vectors)
    out = []
    for u in sorted(vs):
        for v in sorted(vs):
            if u == v:
                continue
            n = len(u)
            if not any(
                u[i] > v[i] and u[j] < v[j] and swap(u, i, j) in vs
                for i in range(n)
                for j in range(n)
            ):
                out.append((u, v))
    return out


def base_exchange_failures(vectors):
    vs = set(vectors)
    out = []
    for u in sorted(vs):
        for v in sorted(vs):
            n = len(u)
            for i in range(n):
                if u[i] > v[i] and not any(
                    u[j] < v[j] and swap(u, i, j) in vs for j in range(n)
                ):
                    out.append((u, v, i + 1))
    return out


def strong_failures(vectors):
    vs = set(vectors)
    out = []
    for u in sorted(vs):
        for v in sorted(vs):
            if u == v:
                continue
            n = len(u)
            for i in range(n):
                for j in range(n):
                    if u[i] > v[i] and u[j] < v[j] and swap(u, i, j) not in vs:
                        out.append((u, v, i + 1, j + 1))
    return out


def symmetric_failures(vectors):
    vs = set(vectors)
    out = []
    for u in sorted(vs):
        for v in sorted(vs):
            n = len(u)
            for i in range(n):
                if u[i] > v[i] and not any(
                    u[j] < v[j] and swap(u, i, j) in vs and swap(v, j, i) in vs
                    for j in range(n)
                ):
                    out.append((u, v, i + 1))
    return out


def downward_closure(vectors):
    out = set()
    for u in vectors:
        for sub in product(*(range(e + 1) for e in u)):
            out.add(sub)
    return out


def maximal(vectors):
    vs = set(vectors)
    return {
        u
        for u in vs
        if not any(v != u and all(a <= b for a, b in zip(u, v)) for v in vs)
    }


def is_downward_closed_polymatroid(vectors):
    """(D1) and (D2) checked verbatim from their definitions."""
    vs = set(vectors)
    for u in vs:
        for sub in product(*(range(e + 1) for e in u)):
            if sub not in vs:
                return False
    for u in vs:
        for v in vs:
            if sum(v) > sum(u):
                hit = False
                for i in range(len(u)):
                    if u[i] < v[i]:
                        w = list(u)
                        w[i] += 1
                        if tuple(w) in vs:
                            hit = True
                if not hit:
                    return False
    return True


def sort_pair(u, v):
    """Sorting operator through the explicit merged index sequence."""
    merged = []
    for idx in range(len(u)):
        merged.extend([idx] * (u[idx] + v[idx]))
    merged.sort()
    a = [0] * len(u)
    b = [0] * len(u)
    for pos, idx in enumerate(merged, start=1):
        if pos % 2 == 1:
            a[idx] += 1
        else:
            b[idx] += 1
    return tuple(a), tuple(b)


def rank_values(vectors, n):
    """Max subset mass over the vectors, via explicit element subsets."""
    values = [0] * (1 << n)
    elements = list(range(n))
    for size in range(1, n + 1):
        for combo in combinations(elements, size):
            mask = sum(1 << e for e in combo)
            values[mask] = max(sum(u[e] for e in combo) for u in vectors)
    return tuple(values)


def points_under(values, n):
    """Box enumeration of {u : u(A) <= values[A]}, no pruning."""
    caps = [values[1 << i] for i in range(n)]
    out = set()
    for u in product(*(range(c + 1) for c in caps)):
        ok = True
        for mask in range(1, 1 << n):
            total = sum(u[i] for i in range(n) if mask & (1 << i))
            if total > values[mask]:
                ok = False
                break
        if ok:
            out.add(u)
    return out


def is_strongly_stable(vectors):
    vs = set(vectors)
    for u in vs:
        for i in range(len(u)):
            if u[i] > 0:
                for j in range(i):
                    if swap(u, i, j) not in vs:
                        return False
    return True


def stable_or_exchange_holds(vectors):
    """The two-sided fallback swap every strongly stable set admits."""
    vs = set(vectors)
    for u in vs:
        for v in vs:
            if u == v:
                continue
            n = len(u)
            if not any(
                u[i] > v[i]
                and u[j] < v[j]
                and (swap(u, i, j) in vs or swap(v, j, i) in vs)
                for i in range(n)
                for j in range(n)
            ):
                return False
    return True


def simplex_count(n, d):
    """Number of vectors in Z_+^n with |u| <= d."""
    from math import comb

    return comb(n + d, n)


def layer_count(n, d):
    """Number of vectors in Z_+^n with |u| = d."""
    from math import comb

    return comb(n + d - 1, n - 1)
