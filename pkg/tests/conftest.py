import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from netentropy.graph import Graph  # noqa: E402


def random_connected_edges(rng: random.Random, n: int, extra: float):
    """Random spanning tree plus each remaining pair with probability ``extra``."""
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < extra:
                edges.add((u, v))
    return sorted(edges)


def random_connected_graph(seed: int, n_max: int = 64):
    rng = random.Random(seed)
    n = rng.randint(2, n_max)
    edges = random_connected_edges(rng, n, rng.choice([0.0, 0.02, 0.1, 0.3]))
    return Graph.from_edges(n, edges), edges


@pytest.fixture
def k4():
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], "abcd")


@pytest.fixture
def p3():
    return Graph.from_edges(3, [(0, 1), (1, 2)], "abc")


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
