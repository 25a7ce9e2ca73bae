import random

import pytest

from perron.digraph import MultiDigraph, is_primitive, is_strongly_connected


def random_digraph(rng: random.Random, m_max: int = 9, mult_max: int = 2) -> MultiDigraph:
    """A random strongly connected multi-digraph, biased toward low complexity."""
    while True:
        m = rng.randint(1, m_max)
        density = rng.uniform(1.2, 2.2) / m
        grid = [[0] * m for _ in range(m)]
        for i in range(m):
            for j in range(m):
                if rng.random() < density:
                    grid[i][j] = rng.randint(1, mult_max)
        d = MultiDigraph.from_rows(grid)
        if is_strongly_connected(d):
            return d


def random_primitive_digraph(rng: random.Random, m_max: int = 8, mult_max: int = 2) -> MultiDigraph:
    while True:
        d = random_digraph(rng, m_max=m_max, mult_max=mult_max)
        if is_primitive(d):
            return d


@pytest.fixture
def rng():
    return random.Random(271828)
