import random

import pytest

from evencycles.graphs import Graph, connectivity_cut, is_connected


def seeded_three_connected(seed: int) -> Graph:
    """Deterministic random 3-connected graph with 6 <= n <= 12."""
    rng = random.Random(seed)
    while True:
        n = rng.randint(6, 12)
        p = rng.uniform(0.4, 0.8)
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
        ]
        g = Graph.build(n, edges)
        if is_connected(g) and connectivity_cut(g, 3) is None:
            return g


@pytest.fixture(scope="session")
def three_connected_factory():
    return seeded_three_connected
