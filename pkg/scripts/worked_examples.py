#!/usr/bin/env python3
"""Gallery of the classical worked examples, printed as a summary table.

Covers the exchange classification of the five small base sets, the
h*-vectors and Gorenstein verdicts of the rank-3 and rank-4 simplex
polymatroids on three elements, the two-sided Gorenstein routes, a
non-transversal polymatroid, and the Borel divisibility test.

Run: python scripts/worked_examples.py
"""

from polymat import (
    ExchangeMode,
    GenericGorensteinParams,
    RankFunction,
    base_ring_generators,
    base_ring_gorenstein,
    base_set,
    bases,
    borel_gorenstein,
    ehrhart_generators,
    ehrhart_gorenstein,
    exchange_property,
    generic_gorenstein_rank,
    h_star,
    is_generic,
    is_sortable,
    is_strongly_stable,
    is_transversal,
    polymatroid_from_rank,
    principal_borel,
    rank_function,
    vector_set,
    veronese,
    white_check,
)

NAMED_SETS = {
    "four bases on [4]": [(1, 1, 1, 1), (0, 2, 0, 2), (0, 1, 1, 2), (1, 2, 0, 1)],
    "Borel closure of (2,1,1)": sorted(principal_borel((2, 1, 1)).vectors),
    "stable non-base set": [(3, 0, 1), (1, 3, 0), (3, 1, 0), (2, 2, 0), (4, 0, 0)],
    "Borel closure of (0,1,0,1)": sorted(principal_borel((0, 1, 0, 1)).vectors),
    "Veronese caps (2,2), rank 3": sorted(veronese((2, 2), 3).vectors),
}


def flag(verdict) -> str:
    return "yes" if verdict else "no "


def exchange_table() -> None:
    print("exchange classification")
    print(f"  {'set':30s} weak base strong sortable stable")
    for name, vectors in NAMED_SETS.items():
        B = base_set(vectors)
        weak = flag(exchange_property(B, ExchangeMode.WEAK))
        base = flag(exchange_property(B, ExchangeMode.BASE))
        strong = flag(exchange_property(B, ExchangeMode.STRONG))
        sortable = flag(is_sortable(B))
        stable = flag(is_strongly_stable(vector_set(vectors)))
        print(f"  {name:30s} {weak}  {base}  {strong}    {sortable}      {stable}")
    print()


def hilbert_table() -> None:
    print("h*-vectors of the simplex polymatroids on [3]")
    for d in (3, 4):
        rho = RankFunction(3, (0,) + (d,) * 7)
        P = polymatroid_from_rank(rho)
        point = h_star(ehrhart_generators(P))
        base = h_star(base_ring_generators(bases(P)))
        delta = ehrhart_gorenstein(rho)
        print(
            f"  rank {d}: point ring h* = {point.h_star_trimmed} "
            f"(D = {point.krull_dim}, dilation = {delta}), "
            f"base ring h* = {base.h_star_trimmed}"
        )
        print(
            f"          point ring Gorenstein: {flag(delta is not None)} "
            f"base ring Gorenstein: {flag(base.h_star_trimmed == base.h_star_trimmed[::-1])}"
        )
    print()


def white_examples() -> None:
    print("fiber connectivity (symmetric exchange moves)")
    for name in ("four bases on [4]", "Borel closure of (0,1,0,1)"):
        B = base_set(NAMED_SETS[name])
        verdict2 = white_check(B, 2)
        verdict3 = white_check(B, 3)
        print(f"  {name:30s} degree 2: {flag(verdict2)} degree 3: {flag(verdict3)}")
    print()


def transversal_example() -> None:
    print("transversal recognition")
    vals = tuple(0 if m == 0 else min(2 * bin(m).count("1"), 3) for m in range(16))
    P = polymatroid_from_rank(RankFunction(4, vals))
    found = is_transversal(P)
    print(f"  caps 2, rank 3 on [4]: presentation found: {flag(found is not None)}")
    cube = polymatroid_from_rank(RankFunction(3, (0,) + (2,) * 7))
    pres = is_transversal(cube)
    print(f"  rank-2 simplex on [3]: presentation {pres.subsets_as_elements()}")
    print()


def generic_example() -> None:
    print("generic construction with Gorenstein base ring")
    params = GenericGorensteinParams((2, 2), 6)
    rho = generic_gorenstein_rank(params)
    P = polymatroid_from_rank(rho)
    print(f"  alpha = (2, 2), rank 6: values {rho.values}")
    print(
        f"  generic: {flag(is_generic(P))} "
        f"base ring Gorenstein: {flag(base_ring_gorenstein(P.base_set))}"
    )
    print()


def borel_table() -> None:
    print("Gorenstein principal Borel sets (divisibility test vs h* oracle)")
    for a in ((0, 1, 1, 2), (0, 1, 0, 2, 0, 3), (0, 0, 0, 2), (0, 0, 0, 3), (1, 2)):
        quick = borel_gorenstein(a)
        slow = base_ring_gorenstein(base_set(principal_borel(a).vectors))
        marker = "agree" if quick == slow else "DISAGREE"
        print(f"  a = {a}: criterion {flag(quick)} oracle {flag(slow)} [{marker}]")
    print()


def main() -> None:
    exchange_table()
    hilbert_table()
    white_examples()
    transversal_example()
    generic_example()
    borel_table()


if __name__ == "__main__":
    main()
