import sys
from pathlib import Path
from random import Random

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from polymat import base_set, random_polymatroid, vector_set

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")

# The five worked base sets used across the suite.
FOUR_BASES = [(1, 1, 1, 1), (0, 2, 0, 2), (0, 1, 1, 2), (1, 2, 0, 1)]
BOREL_211 = [(2, 1, 1), (2, 2, 0), (3, 0, 1), (3, 1, 0), (4, 0, 0)]
STABLE_FIVE = [(3, 0, 1), (1, 3, 0), (3, 1, 0), (2, 2, 0), (4, 0, 0)]
BOREL_0101 = [
    (0, 1, 0, 1),
    (0, 1, 1, 0),
    (0, 2, 0, 0),
    (1, 0, 0, 1),
    (1, 0, 1, 0),
    (1, 1, 0, 0),
    (2, 0, 0, 0),
]


@pytest.fixture
def four_bases():
    return base_set(FOUR_BASES)


@pytest.fixture
def borel_211():
    return base_set(BOREL_211)


@pytest.fixture
def stable_five():
    return base_set(STABLE_FIVE)


@pytest.fixture
def borel_0101():
    return base_set(BOREL_0101)


@pytest.fixture
def stable_five_set():
    return vector_set(STABLE_FIVE)


@pytest.fixture(scope="session")
def instance_pool():
    """200 seeded random polymatroids with their generating rank functions."""
    pool = []
    for seed in range(200):
        rng = Random(seed)
        pool.append(random_polymatroid(rng, max_n=5, max_rank=5))
    return pool


@pytest.fixture(scope="session")
def positive_pool():
    """50 seeded polymatroids containing every unit vector, n <= 3, rank <= 4."""
    pool = []
    for seed in range(50):
        rng = Random(10_000 + seed)
        n = rng.randint(1, 3)
        from polymat import polymatroid_from_rank, random_rank_function

        rho = random_rank_function(rng, n, 4, ensure_positive=True)
        pool.append((rho, polymatroid_from_rank(rho)))
    return pool
