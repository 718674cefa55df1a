from itertools import product
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from polymat import (
    GenericGorensteinParams,
    RankFunction,
    base_ring_generators,
    base_ring_gorenstein,
    base_set,
    bases,
    closed_inseparable_subsets,
    discrete_polymatroid,
    ehrhart_generators,
    ehrhart_gorenstein,
    generic_gorenstein_rank,
    graded_generators,
    h_star,
    hilbert_function,
    hilbert_values,
    is_generic,
    is_gorenstein_hstar,
    normality_check,
    polymatroid_from_rank,
    rank_function,
    subset_mask,
    validate_rank_function,
    vector_set,
    veronese,
)


def constant_rank(n, d):
    return RankFunction(n, (0,) + (d,) * ((1 << n) - 1))


def cube(n, d):
    return polymatroid_from_rank(constant_rank(n, d))


def cap_rank(caps, d):
    """min(sum of caps on A, d): the two-sided family on small ground sets."""
    n = len(caps)
    vals = [0]
    for mask in range(1, 1 << n):
        vals.append(min(sum(caps[i] for i in range(n) if mask >> i & 1), d))
    return RankFunction(n, tuple(vals))


# --- Hilbert functions --------------------------------------------------------


def test_hilbert_function_examples():
    ver = base_ring_generators(veronese((3, 3, 3), 3))
    assert hilbert_function(ver, 1) == comb(3 + 2, 2)  # degree-3 monomials in 3 vars
    assert hilbert_function(ver, 0) == 1
    ehr = ehrhart_generators(cube(3, 3))
    assert hilbert_function(ehr, 1) == comb(6, 3)  # lattice size of the rank-3 simplex


def test_hilbert_closed_forms():
    # Veronese of degree d in n variables counts degree-dt monomials
    for n, d in ((2, 3), (3, 3), (3, 4)):
        G = base_ring_generators(veronese((d,) * n, d))
        assert hilbert_values(G, 3) == [comb(d * t + n - 1, n - 1) for t in range(4)]
    # the point ring of the rank-d simplex counts the dilated simplex
    for n, d in ((2, 2), (3, 3), (3, 4)):
        G = ehrhart_generators(cube(n, d))
        assert hilbert_values(G, 3) == [comb(d * t + n, n) for t in range(4)]


# --- h* vectors ----------------------------------------------------------------


def test_h_star_point_ring_rank3():
    data = h_star(ehrhart_generators(cube(3, 3)))
    assert data.krull_dim == 4
    assert data.h_star == (1, 16, 10, 0)
    assert data.h_star_trimmed == (1, 16, 10)


def test_h_star_point_ring_rank4():
    data = h_star(ehrhart_generators(cube(3, 4)))
    assert data.krull_dim == 4
    assert data.h_star == (1, 31, 31, 1)


def test_h_star_two_generators():
    data = h_star(base_ring_generators(base_set([(2, 1), (1, 2)])))
    assert data.krull_dim == 2
    assert data.h_star == (1, 0)


def test_h_star_veronese_cube():
    assert h_star(base_ring_generators(veronese((3, 3, 3), 3))).h_star == (1, 7, 1)
    assert h_star(base_ring_generators(veronese((4, 4, 4), 4))).h_star == (1, 12, 3)


def test_h_star_single_generator():
    data = h_star(graded_generators([(5, 0, 2)]))
    assert data.krull_dim == 1
    assert data.h_star == (1,)


def test_h_star_sum_is_normalized_volume():
    assert sum(h_star(ehrhart_generators(cube(3, 3))).h_star) == 27
    assert sum(h_star(base_ring_generators(veronese((3, 3, 3), 3))).h_star) == 9
    assert sum(h_star(base_ring_generators(veronese((4, 4, 4), 4))).h_star) == 16


def test_h_star_rejects_non_normal_input():
    # sums of two of these miss (5, 1), so the degree-2 count is off
    with pytest.raises(ValueError):
        h_star(graded_generators([(3, 0), (1, 2), (0, 3)]))


def test_gorenstein_hstar_examples():
    assert not is_gorenstein_hstar(ehrhart_generators(cube(3, 3)))
    assert is_gorenstein_hstar(ehrhart_generators(cube(3, 4)))
    assert is_gorenstein_hstar(base_ring_generators(veronese((3, 3, 3), 3)))
    assert not is_gorenstein_hstar(base_ring_generators(veronese((4, 4, 4), 4)))


def test_base_ring_gorenstein_examples(stable_five):
    assert base_ring_gorenstein(bases(cube(3, 3)))
    assert not base_ring_gorenstein(bases(cube(3, 4)))
    assert base_ring_gorenstein(base_set([(2, 1), (1, 2)]))
    with pytest.raises(ValueError):
        base_ring_gorenstein(stable_five)


# --- normality -----------------------------------------------------------------


def test_normality_examples(borel_211):
    assert normality_check(base_ring_generators(borel_211), 3)
    assert normality_check(ehrhart_generators(cube(2, 3)), 3)
    assert normality_check(graded_generators([(4, 4)]), 2)
    assert normality_check(graded_generators([(0, 0, 1), (1, 1, 1)]), 2)


def test_normality_detects_gap():
    # (2, 1) sits in the hull and the difference lattice but is not a generator
    verdict = normality_check(graded_generators([(3, 0), (1, 2), (0, 3)]), 2)
    assert not verdict
    assert verdict.witness == (1, (2, 1))
    verdict = normality_check(graded_generators([(3, 0), (2, 1), (0, 3)]), 2)
    assert not verdict
    assert verdict.witness == (1, (1, 2))


def test_normality_rejects_bad_tmax(borel_211):
    with pytest.raises(ValueError):
        normality_check(base_ring_generators(borel_211), 0)


@settings(max_examples=10, deadline=None)
@given(seed=st.integers(0, 49))
def test_normality_on_positive_pool(positive_pool, seed):
    _, P = positive_pool[seed]
    assert normality_check(ehrhart_generators(P), 2)
    assert normality_check(base_ring_generators(P.base_set), 2)


# --- facets ---------------------------------------------------------------------


def test_closed_inseparable_constant_rank():
    desc = closed_inseparable_subsets(constant_rank(3, 4))
    assert desc.coordinate_facets == (1, 2, 3)
    assert desc.rank_facets == ((7, 4),)  # only the full set


def test_closed_inseparable_cardinality_plus_one():
    n = 3
    vals = tuple(0 if m == 0 else bin(m).count("1") + 1 for m in range(1 << n))
    desc = closed_inseparable_subsets(RankFunction(n, vals))
    assert len(desc.rank_facets) == (1 << n) - 1  # every nonempty subset


def test_closed_inseparable_initial_segments():
    # ceil((max A + 1) / 2) on [3]: closed sets are prefixes with even end + 1
    vals = (0, 1, 2, 2, 2, 2, 2, 2)
    desc = closed_inseparable_subsets(RankFunction(3, vals))
    assert [mask for mask, _ in desc.rank_facets] == [1, 7]  # {1} and [3]


def test_closed_inseparable_requires_positive_singletons():
    with pytest.raises(ValueError):
        closed_inseparable_subsets(RankFunction(2, (0, 0, 1, 1)))


# --- the dilation criterion ------------------------------------------------------


def test_ehrhart_gorenstein_examples():
    assert ehrhart_gorenstein(constant_rank(3, 4)) == 1
    assert ehrhart_gorenstein(constant_rank(3, 3)) is None
    n = 3
    vals = tuple(0 if m == 0 else bin(m).count("1") + 1 for m in range(1 << n))
    assert ehrhart_gorenstein(RankFunction(n, vals)) == 1
    assert ehrhart_gorenstein(RankFunction(3, (0, 1, 2, 2, 2, 2, 2, 2))) == 2


def test_criterion_matches_oracle_dimension_four():
    # the two Gorenstein routes agree beyond the sampled sizes
    from random import Random

    from polymat import random_rank_function

    for seed in range(12):
        rng = Random(20_000 + seed)
        rho = random_rank_function(rng, 4, 4, ensure_positive=True)
        P = polymatroid_from_rank(rho)
        exact = rank_function(P.base_set)
        assert (ehrhart_gorenstein(exact) is not None) == is_gorenstein_hstar(
            ehrhart_generators(P)
        )


# --- genericity -------------------------------------------------------------------


def test_is_generic_two_caps():
    assert is_generic(polymatroid_from_rank(cap_rank((2, 2), 3)))
    verdict = is_generic(polymatroid_from_rank(cap_rank((3, 3), 3)))
    assert not verdict
    assert verdict.witness[0] == "G1"


def test_is_generic_grid_matches_closed_form():
    # two-cap instances are generic exactly when each cap is below the
    # rank and the caps jointly exceed it
    for a1, a2, d in product(range(1, 5), range(1, 5), range(2, 6)):
        if a1 + a2 < d:
            continue
        P = polymatroid_from_rank(cap_rank((a1, a2), d))
        expected = a1 < d and a2 < d and d < a1 + a2
        assert bool(is_generic(P)) == expected, (a1, a2, d)


def test_is_generic_requires_units():
    P = discrete_polymatroid(vector_set([(0, 0), (1, 0)]))
    with pytest.raises(ValueError):
        is_generic(P)


def test_generic_gorenstein_construction_example():
    rho = generic_gorenstein_rank(GenericGorensteinParams((2, 2), 6))
    by_subset = {
        (1,): 3,
        (2,): 3,
        (3,): 3,
        (1, 2): 5,
        (1, 3): 5,
        (2, 3): 5,
        (1, 2, 3): 6,
    }
    for elems, want in by_subset.items():
        assert rho.values[subset_mask(list(elems), 3)] == want
    assert rho.values[0] == 0
    # complementary singleton/pair sums sit two above the rank
    for i, jk in (((1,), (2, 3)), ((2,), (1, 3)), ((3,), (1, 2))):
        got = rho.values[subset_mask(list(i), 3)] + rho.values[subset_mask(list(jk), 3)]
        assert got == 6 + 2


def test_generic_gorenstein_round_trip_small():
    rho = generic_gorenstein_rank(GenericGorensteinParams((2, 2), 6))
    assert validate_rank_function(rho)
    P = polymatroid_from_rank(rho)
    assert is_generic(P)
    assert base_ring_gorenstein(P.base_set)


def test_generic_gorenstein_params_validation():
    with pytest.raises(ValueError):
        GenericGorensteinParams((2,), 5)
    with pytest.raises(ValueError):
        GenericGorensteinParams((1, 2), 6)
    with pytest.raises(ValueError):
        GenericGorensteinParams((2, 2), 5)


def test_two_cap_gorenstein_closed_form():
    # generic two-cap instances: Gorenstein base ring exactly when the
    # caps sum to rank + 1 or rank + 2
    for a1, a2, d in product(range(2, 6), range(2, 6), range(3, 7)):
        if not (a1 < d and a2 < d and d < a1 + a2):
            continue
        P = polymatroid_from_rank(cap_rank((a1, a2), d))
        assert base_ring_gorenstein(P.base_set) == (a1 + a2 in (d + 1, d + 2)), (a1, a2, d)


def test_h_star_series_identity_on_pool(positive_pool):
    for _, P in positive_pool[:10]:
        data = h_star(ehrhart_generators(P))
        D = data.krull_dim
        for t, H in enumerate(data.values):
            assert H == sum(
                data.h_star[i] * comb(D - 1 + t - i, D - 1)
                for i in range(min(t, D - 1) + 1)
            )
