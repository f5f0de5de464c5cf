"""Undirected simple graphs, edge-list I/O and connectivity helpers.

Node labels are arbitrary strings mapped to dense indices ``0..n-1`` in
first-appearance order. All metrics work on indices.
"""

from __future__ import annotations

import io
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from .errors import (
    EmptyInputError,
    MalformedLineError,
    NetEntropyError,
    SelfLoopError,
)


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph.

    Attributes
    ----------
    labels : tuple of str
        Node labels; index ``i`` is labelled ``labels[i]``.
    adjacency : tuple of frozenset of int
        ``adjacency[i]`` is the set of neighbour indices of node ``i``.
    """

    labels: tuple[str, ...]
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self):
        n = len(self.labels)
        if n < 1:
            raise NetEntropyError("a graph needs at least one node")
        if len(self.adjacency) != n:
            raise NetEntropyError("adjacency length does not match label count")
        if len(set(self.labels)) != n:
            raise NetEntropyError("node labels must be unique")
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if not 0 <= v < n:
                    raise NetEntropyError(f"edge ({u}, {v}) has an invalid endpoint")
                if v == u:
                    raise NetEntropyError(f"self-loop on node {u}")
                if u not in self.adjacency[v]:
                    raise NetEntropyError(f"adjacency is not symmetric at ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[str] | None = None) -> "Graph":
        """Build a graph on ``n`` indexed nodes from ``(u, v)`` index pairs.

        Duplicate edges collapse; self-loops raise.
        """
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise NetEntropyError(f"self-loop on node {u}")
            adj[u].add(v)
            adj[v].add(u)
        if labels is None:
            labels = [str(i) for i in range(n)]
        return cls(tuple(labels), tuple(frozenset(s) for s in adj))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adjacency) // 2

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for u, nbrs in enumerate(self.adjacency)
                for v in sorted(nbrs) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def subgraph(self, nodes: Iterable[int]) -> "Graph":
        """Induced subgraph on ``nodes`` (kept in ascending index order)."""
        keep = sorted(set(nodes))
        remap = {old: new for new, old in enumerate(keep)}
        adjacency = tuple(
            frozenset(remap[v] for v in self.adjacency[old] if v in remap)
            for old in keep
        )
        return Graph(tuple(self.labels[i] for i in keep), adjacency)

    def with_edge(self, u: int, v: int) -> "Graph":
        """Copy of the graph with edge ``(u, v)`` added."""
        return Graph.from_edges(self.n, self.edges() + [(u, v)], self.labels)

    def to_edge_list(self) -> str:
        """Serialize to the edge-list text format read by :func:`from_edge_list`.

        Isolated nodes have no representation in that format and are dropped.
        """
        return "".join(f"{self.labels[u]} {self.labels[v]}\n" for u, v in self.edges())


def from_edge_list(text: str | TextIO) -> Graph:
    """Parse a whitespace-separated edge list.

    Each data line holds two node labels. Lines starting with ``#`` and
    blank lines are skipped. Repeated and reversed edges collapse into one.

    Raises
    ------
    MalformedLineError
        A data line does not hold exactly two tokens.
    SelfLoopError
        Both endpoints of a line are the same label.
    EmptyInputError
        No data lines were found.
    """
    stream = io.StringIO(text) if isinstance(text, str) else text
    index: dict[str, int] = {}
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise MalformedLineError(lineno, raw.rstrip("\n"))
        a, b = tokens
        if a == b:
            raise SelfLoopError(lineno, a)
        u = index.setdefault(a, len(index))
        v = index.setdefault(b, len(index))
        edges.add((min(u, v), max(u, v)))
    if not index:
        raise EmptyInputError("edge list contains no data lines")
    return Graph.from_edges(len(index), edges, list(index))


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return from_edge_list(fh)


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(g.to_edge_list())


def connected_components(g: Graph) -> list[list[int]]:
    """Partition node indices into connected components.

    Parts are sorted ascending internally, ordered by size descending and
    then by smallest contained index.
    """
    seen = [False] * g.n
    parts = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        part = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    part.append(v)
                    queue.append(v)
        parts.append(sorted(part))
    # parts are discovered in order of their smallest index, so a stable sort
    # on size alone gives the tie-break for free
    parts.sort(key=len, reverse=True)
    return parts


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def largest_component(g: Graph) -> Graph:
    """Induced subgraph on the largest connected component."""
    parts = connected_components(g)
    if len(parts) == 1:
        return g
    return g.subgraph(parts[0])
