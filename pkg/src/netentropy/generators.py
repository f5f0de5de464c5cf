"""Synthetic graphs and nested cluster hierarchies."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .errors import (
    HierarchyOverflowError,
    InvalidCountError,
    InvalidDegreeError,
    InvalidProbabilityError,
    NetEntropyError,
)
from .graph import Graph

MAX_HIERARCHY_LEAVES = 10_000_000


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidCountError(f"n must be >= 1, got {n}")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def _check_lattice(n, k):
    if k < 2 or k % 2 or not n > k:
        raise InvalidDegreeError(f"need an even k >= 2 with n > k, got n={n}, k={k}")


def ring_lattice(n: int, k: int) -> Graph:
    """Ring of ``n`` nodes, each joined to its ``k/2`` nearest neighbours per side."""
    _check_lattice(n, k)
    return Graph.from_edges(n, ((u, (u + j) % n) for j in range(1, k // 2 + 1)
                                for u in range(n)))


def watts_strogatz(n: int, k: int, p: float, seed: int) -> Graph:
    """Watts-Strogatz small-world graph.

    Starts from :func:`ring_lattice` and visits the lattice edges
    ``(u, u + j)`` for ``j = 1..k/2`` and ``u = 0..n-1`` in that order. Each is
    rewired with probability ``p`` by replacing ``u + j`` with a uniformly
    drawn node; draws that would make a self-loop or duplicate edge are
    rejected and redrawn. Edge count stays ``n * k / 2``.
    """
    _check_lattice(n, k)
    if not 0 <= p <= 1:
        raise InvalidProbabilityError(f"p must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    adj = [set() for _ in range(n)]
    for j in range(1, k // 2 + 1):
        for u in range(n):
            v = (u + j) % n
            adj[u].add(v)
            adj[v].add(u)
    for j in range(1, k // 2 + 1):
        for u in range(n):
            v = (u + j) % n
            if rng.random() >= p:
                continue
            # u already adjacent to everyone: no legal target
            if len(adj[u]) >= n - 1:
                continue
            w = rng.randrange(n)
            while w == u or w in adj[u]:
                w = rng.randrange(n)
            adj[u].discard(v)
            adj[v].discard(u)
            adj[u].add(w)
            adj[w].add(u)
    labels = tuple(str(i) for i in range(n))
    return Graph(labels, tuple(frozenset(s) for s in adj))


@dataclass(frozen=True)
class ClusterHierarchy:
    """Nested partitions of ``branching ** depth`` leaves.

    ``partitions[k]`` is generation ``k``: a tuple of clusters, each a tuple
    of leaf indices. Generation 0 is the single cluster of all leaves and
    generation ``depth`` holds the singletons.
    """

    branching: int
    depth: int
    partitions: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def leaves(self) -> int:
        return self.branching ** self.depth

    def to_nested(self):
        """Tree form: generation-0 cluster as a list of ``branching`` sublists, down to leaf ints."""
        def build(k, j):
            if k == self.depth:
                return self.partitions[k][j][0]
            b = self.branching
            return [build(k + 1, j * b + i) for i in range(b)]
        return build(0, 0)

    def to_json(self) -> str:
        return json.dumps(self.to_nested())

    def to_brackets(self) -> str:
        """Flattened-row rendering, e.g. ``[(...)(...)(...)]`` style with leaf dots."""
        opens, closes = "[({", "])}"

        def render(node, level):
            if isinstance(node, int):
                return "."
            inner = "".join(render(c, level + 1) for c in node)
            if level == 0:
                return inner
            i = (level - 1) % 3
            return opens[i] + inner + closes[i]

        return render(self.to_nested(), 0)


def nested_hierarchy(L: int, eta: int) -> ClusterHierarchy:
    """Flat hierarchy of ``L ** eta`` leaves in ``eta + 1`` generations.

    Generation ``k`` cluster ``j`` holds leaves ``j * L**(eta-k)`` up to
    ``(j + 1) * L**(eta-k) - 1``.

    >>> h = nested_hierarchy(3, 3)
    >>> [len(p) for p in h.partitions]
    [1, 3, 9, 27]
    """
    if L < 2 or eta < 1:
        raise NetEntropyError(f"need L >= 2 and eta >= 1, got L={L}, eta={eta}")
    leaves = L ** eta
    if leaves > MAX_HIERARCHY_LEAVES:
        raise HierarchyOverflowError(
            f"{L}**{eta} = {leaves} leaves exceeds the limit of {MAX_HIERARCHY_LEAVES}")
    partitions = []
    for k in range(eta + 1):
        size = L ** (eta - k)
        partitions.append(tuple(tuple(range(j * size, (j + 1) * size))
                                for j in range(L ** k)))
    return ClusterHierarchy(L, eta, tuple(partitions))


def hierarchy_from_nested(tree, branching: int | None = None) -> ClusterHierarchy:
    """Rebuild a :class:`ClusterHierarchy` from its :meth:`~ClusterHierarchy.to_nested` form.

    The result is not validated; pass it to :func:`verify_hierarchy`.
    """
    if isinstance(tree, str):
        tree = json.loads(tree)
    levels = [[tree]]
    while any(isinstance(c, list) for c in levels[-1]):
        levels.append([child for c in levels[-1] if isinstance(c, list) for child in c])

    def leaves_of(node):
        if isinstance(node, int):
            return (node,)
        return tuple(x for c in node for x in leaves_of(c))

    if branching is None:
        branching = len(tree) if isinstance(tree, list) else 1
    partitions = tuple(tuple(leaves_of(c) for c in level) for level in levels)
    return ClusterHierarchy(branching, len(levels) - 1, partitions)


def verify_hierarchy(h: ClusterHierarchy, max_violations: int = 10) -> tuple[bool, list[tuple[int, int, str]]]:
    """Check the size and nesting invariants of ``h``.

    Returns ``(ok, violations)`` where each violation is
    ``(generation, cluster_index, reason)``; at most ``max_violations`` are
    collected.
    """
    violations: list[tuple[int, int, str]] = []

    def report(k, j, why):
        if len(violations) < max_violations:
            violations.append((k, j, why))

    L, eta = h.branching, h.depth
    if L < 2 or eta < 1:
        report(0, 0, f"invalid shape L={L}, eta={eta}")
        return False, violations
    if len(h.partitions) != eta + 1:
        report(0, 0, f"expected {eta + 1} generations, found {len(h.partitions)}")
        return False, violations

    universe = set(range(L ** eta))
    owner_prev: dict[int, int] = {}
    for k, generation in enumerate(h.partitions):
        size = L ** (eta - k)
        if len(generation) != L ** k:
            report(k, -1, f"expected {L ** k} clusters, found {len(generation)}")
        owner: dict[int, int] = {}
        for j, cluster in enumerate(generation):
            if len(cluster) != size:
                report(k, j, f"expected size {size}, found {len(cluster)}")
            for leaf in cluster:
                if leaf not in universe:
                    report(k, j, f"unknown leaf {leaf}")
                elif leaf in owner:
                    report(k, j, f"leaf {leaf} also in cluster {owner[leaf]}")
                else:
                    owner[leaf] = j
        if owner.keys() != universe:
            report(k, -1, f"{len(universe - owner.keys())} leaves not covered")
        if k > 0:
            for j, cluster in enumerate(generation):
                parents = {owner_prev.get(leaf) for leaf in cluster}
                if len(parents) != 1 or None in parents:
                    report(k, j, f"spans parent clusters {sorted(p for p in parents if p is not None)}")
        owner_prev = owner
    return not violations, violations
