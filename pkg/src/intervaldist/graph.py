"""Finite simple graphs, interval representations and their text formats.

Edge-list format::

    n m
    u v        (m lines, 0 <= u, v < n, u != v)

Interval format::

    n
    left right (n lines, integers, left <= right)

Both formats reject extra tokens and lines after the declared records.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import networkx as nx

from .errors import GraphFormatError

__all__ = [
    "Graph",
    "IntervalRepresentation",
    "parse_edge_list",
    "parse_intervals",
    "parse_graph_text",
    "graph_from_intervals",
    "maximal_cliques",
    "is_connected",
]


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the neighbourhood of ``v``; use :meth:`from_edges`
    rather than building the tuple by hand.
    """

    n: int
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adjacency) != self.n:
            raise ValueError("adjacency must have exactly n entries")
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"vertex id {u} out of range")
                if v not in self.adjacency[u]:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(s) for s in adj))

    @property
    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph, relabelled to ``0..len-1``, plus the old ids in new order."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[v]) for u in old for v in self.adjacency[u] if v in index and u < v]
        return Graph.from_edges(len(old), edges), old

    def to_edge_list(self) -> str:
        edges = self.edges()
        lines = [f"{self.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
        return "\n".join(lines) + "\n"

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g


@dataclass(frozen=True)
class IntervalRepresentation:
    """Closed integer intervals, one per vertex."""

    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for i, (left, right) in enumerate(self.intervals):
            if left > right:
                raise ValueError(f"interval {i} has left {left} > right {right}")

    def __len__(self) -> int:
        return len(self.intervals)

    def to_text(self) -> str:
        lines = [str(len(self.intervals))] + [f"{a} {b}" for a, b in self.intervals]
        return "\n".join(lines) + "\n"


def _records(text: str) -> list[list[str]]:
    lines = text.split("\n")
    while lines and not lines[-1].strip():
        lines.pop()
    return [line.split() for line in lines]


def _ints(tokens: list[str], count: int, lineno: int) -> list[int]:
    if len(tokens) != count:
        raise GraphFormatError(f"line {lineno}: expected {count} integers, got {len(tokens)} tokens")
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"line {lineno}: non-integer token in {' '.join(tokens)!r}") from None


def parse_edge_list(text: str) -> Graph:
    records = _records(text)
    if not records:
        raise GraphFormatError("empty input")
    n, m = _ints(records[0], 2, 1)
    if n < 0 or m < 0:
        raise GraphFormatError("line 1: n and m must be nonnegative")
    if len(records) != m + 1:
        raise GraphFormatError(f"expected {m} edge lines, found {len(records) - 1}")
    seen: set[tuple[int, int]] = set()
    for lineno, rec in enumerate(records[1:], start=2):
        u, v = _ints(rec, 2, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex id out of range [0, {n})")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
    return Graph.from_edges(n, seen)


def parse_intervals(text: str) -> IntervalRepresentation:
    records = _records(text)
    if not records:
        raise GraphFormatError("empty input")
    (n,) = _ints(records[0], 1, 1)
    if n < 0:
        raise GraphFormatError("line 1: n must be nonnegative")
    if len(records) != n + 1:
        raise GraphFormatError(f"expected {n} interval lines, found {len(records) - 1}")
    intervals = []
    for lineno, rec in enumerate(records[1:], start=2):
        left, right = _ints(rec, 2, lineno)
        if left > right:
            raise GraphFormatError(f"line {lineno}: left endpoint exceeds right endpoint")
        intervals.append((left, right))
    return IntervalRepresentation(tuple(intervals))


def parse_graph_text(text: str) -> Graph:
    """Parse either format, choosing by the token count of the first line."""
    records = _records(text)
    if not records:
        raise GraphFormatError("empty input")
    if len(records[0]) == 2:
        return parse_edge_list(text)
    if len(records[0]) == 1:
        return graph_from_intervals(parse_intervals(text))
    raise GraphFormatError("line 1: expected 'n m' (edge list) or 'n' (intervals)")


def graph_from_intervals(rep: IntervalRepresentation | Sequence[tuple[int, int]]) -> Graph:
    if not isinstance(rep, IntervalRepresentation):
        rep = IntervalRepresentation(tuple(tuple(iv) for iv in rep))
    ivs = rep.intervals
    edges = [
        (u, v)
        for u in range(len(ivs))
        for v in range(u + 1, len(ivs))
        if ivs[u][0] <= ivs[v][1] and ivs[v][0] <= ivs[u][1]
    ]
    return Graph.from_edges(len(ivs), edges)


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """All maximal cliques, sorted lexicographically by their sorted member lists."""
    if g.n == 0:
        return []
    cliques = (sorted(c) for c in nx.find_cliques(g.to_networkx()))
    return [frozenset(c) for c in sorted(cliques)]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == g.n
