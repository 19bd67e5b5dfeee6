from __future__ import annotations

import os
import random
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "repro", derandomize=True, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repro")

DEFAULT_SEED = 20161017


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=DEFAULT_SEED, help="seed for the randomized suites")


@pytest.fixture
def seed(request) -> int:
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed) -> random.Random:
    return random.Random(seed)


def random_graph(rng: random.Random, n: int, max_mult: int = 5, density: float = 0.5):
    from lpa_lab.graph import from_adjacency

    return from_adjacency(
        [[rng.randint(1, max_mult) if rng.random() < density else 0 for _ in range(n)] for _ in range(n)]
    )
