"""Average path length and clustering coefficient of a graph.

Path lengths are unweighted BFS hop counts. Distance totals are summed as
Python integers so the result does not depend on the order in which the
per-source searches finish.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Literal, Sequence

from .errors import (
    DisconnectedGraphError,
    InvalidSampleSizeError,
    TooFewNodesError,
)
from .graph import Graph, connected_components

EXACT_NODE_LIMIT = 10_000
DEFAULT_SAMPLE_SOURCES = 1_000


@dataclass(frozen=True)
class NetworkStats:
    """Measured macrostate ``(n, L, C)`` of a network.

    ``L`` is ``None`` for a single-node graph. ``restricted`` is set when the
    statistics describe only the largest component of a disconnected input;
    ``original_n`` then holds the input's node count.
    """

    n: int
    L: float | None
    C: float
    method: Literal["exact", "sampled"]
    sample_size: int | None = None
    seed: int | None = None
    restricted: bool = False
    original_n: int | None = None

    def as_dict(self) -> dict:
        return asdict(self)


def _bfs_distance_sum(adjacency: Sequence[frozenset[int]], source: int) -> tuple[int, int]:
    """Return (sum of distances, number of reached nodes) from ``source``."""
    dist = [-1] * len(adjacency)
    dist[source] = 0
    frontier = [source]
    total = 0
    reached = 1
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for u in frontier:
            for v in adjacency[u]:
                if dist[v] < 0:
                    dist[v] = depth
                    nxt.append(v)
        total += depth * len(nxt)
        reached += len(nxt)
        frontier = nxt
    return total, reached


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distance from ``source`` to every node; ``-1`` when unreachable."""
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for u in frontier:
            for v in g.adjacency[u]:
                if dist[v] < 0:
                    dist[v] = depth
                    nxt.append(v)
        frontier = nxt
    return dist


def _chunk_sums(args) -> list[tuple[int, int]]:
    adjacency, sources = args
    return [_bfs_distance_sum(adjacency, s) for s in sources]


def _distance_total(g: Graph, sources: Sequence[int], workers: int) -> int:
    if workers > 1 and len(sources) > workers:
        size = math.ceil(len(sources) / workers)
        chunks = [(g.adjacency, sources[i:i + size]) for i in range(0, len(sources), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = [r for chunk in pool.map(_chunk_sums, chunks) for r in chunk]
    else:
        results = [_bfs_distance_sum(g.adjacency, s) for s in sources]
    total = 0
    for s, (dist_sum, reached) in zip(sources, results):
        if reached != g.n:
            raise DisconnectedGraphError(
                f"node {g.labels[s]!r} reaches only {reached} of {g.n} nodes")
        total += dist_sum
    return total


def average_path_length_exact(g: Graph, workers: int = 1) -> float:
    """Mean shortest-path length over all unordered pairs of distinct nodes.

    Runs a BFS from every node. ``workers > 1`` spreads the searches over
    that many processes; the result is identical either way.

    Raises
    ------
    TooFewNodesError
        The graph has fewer than two nodes.
    DisconnectedGraphError
        Some pair of nodes is not connected.
    """
    if g.n < 2:
        raise TooFewNodesError("path length needs at least two nodes")
    total = _distance_total(g, list(range(g.n)), workers)
    # every unordered pair was counted twice
    return total / (g.n * (g.n - 1))


def average_path_length_sampled(g: Graph, sources: int, seed: int,
                                workers: int = 1) -> float:
    """Mean distance from ``sources`` random distinct nodes to all other nodes.

    Sources are drawn without replacement from ``random.Random(seed)``, so a
    fixed seed reproduces the estimate. With ``sources == g.n`` the value
    equals :func:`average_path_length_exact`.
    """
    if g.n < 2:
        raise TooFewNodesError("path length needs at least two nodes")
    if not 1 <= sources <= g.n:
        raise InvalidSampleSizeError(f"sources must be in [1, {g.n}], got {sources}")
    picked = sorted(random.Random(seed).sample(range(g.n), sources))
    total = _distance_total(g, picked, workers)
    return total / (sources * (g.n - 1))


def local_clustering(g: Graph, u: int) -> float:
    """Fraction of neighbour pairs of ``u`` that are adjacent (0 below degree 2)."""
    nbrs = g.adjacency[u]
    k = len(nbrs)
    if k < 2:
        return 0.0
    links = sum(len(nbrs & g.adjacency[v]) for v in nbrs) // 2
    return links / (k * (k - 1) / 2)


def clustering_coefficient(g: Graph) -> float:
    """Average local clustering over all nodes.

    Nodes of degree 0 or 1 count as 0 rather than being skipped, so the
    value is defined for every graph.
    """
    return math.fsum(local_clustering(g, u) for u in range(g.n)) / g.n


def network_stats(g: Graph, component_policy: Literal["largest", "strict"] = "largest",
                  sample_size: int | None = None, seed: int = 0,
                  workers: int = 1) -> NetworkStats:
    """Measure ``n``, ``L`` and ``C`` for ``g``.

    Parameters
    ----------
    component_policy
        ``"largest"`` measures the largest component of a disconnected graph
        and sets ``restricted``; ``"strict"`` raises
        :class:`DisconnectedGraphError` instead.
    sample_size
        ``None`` computes ``L`` exactly. Otherwise ``L`` is estimated from
        that many BFS sources (capped at the node count) drawn with ``seed``.
    """
    if component_policy not in ("largest", "strict"):
        raise ValueError(f"unknown component policy {component_policy!r}")
    original_n = g.n
    parts = connected_components(g)
    restricted = False
    if len(parts) > 1:
        if component_policy == "strict":
            raise DisconnectedGraphError(
                f"graph has {len(parts)} components; largest has {len(parts[0])} of {g.n} nodes")
        g = g.subgraph(parts[0])
        restricted = True

    C = clustering_coefficient(g)
    if g.n < 2:
        return NetworkStats(g.n, None, C, "exact", restricted=restricted,
                            original_n=original_n if restricted else None)
    if sample_size is None:
        L = average_path_length_exact(g, workers)
        method, used, used_seed = "exact", None, None
    else:
        used = min(sample_size, g.n)
        L = average_path_length_sampled(g, used, seed, workers)
        method, used_seed = "sampled", seed
    return NetworkStats(g.n, L, C, method, used, used_seed, restricted,
                        original_n if restricted else None)


def default_sample_size(n: int) -> int | None:
    """Sampling choice used by the CLI: exact up to 10,000 nodes, else 1,000 sources."""
    return None if n <= EXACT_NODE_LIMIT else DEFAULT_SAMPLE_SOURCES
