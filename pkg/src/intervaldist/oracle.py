"""Brute-force ground truth for small graphs.

Nothing here touches the PQ-tree code: automorphisms come from a
backtracking search over vertex images, class counts from orbit minima over
every coloring, and isomorphism classes from a canonical adjacency form.
The oracle is deliberately naive and capped in size.
"""

from __future__ import annotations

import hashlib
import itertools
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import ScaleLimit
from .graph import Graph, IntervalRepresentation, graph_from_intervals, is_connected

__all__ = [
    "automorphisms",
    "brute_distinguishing",
    "oracle_distinguishing_number",
    "colorings_classes",
    "is_distinguishing",
    "canonical_form",
    "enumerate_interval_graphs",
    "random_interval_graph",
    "corpus_manifest",
    "LCG",
]

MAX_AUT_VERTICES = 10
MAX_COLORINGS = 10**7
MAX_ENUM_VERTICES = 7

Permutation = tuple[int, ...]


def automorphisms(g: Graph) -> list[Permutation]:
    """Every automorphism as an image tuple, in lexicographic order (identity first)."""
    n = g.n
    if n > MAX_AUT_VERTICES:
        raise ScaleLimit(f"automorphism enumeration is capped at {MAX_AUT_VERTICES} vertices")
    image = [-1] * n
    used = [False] * n
    out: list[Permutation] = []

    def extend(v: int) -> None:
        if v == n:
            out.append(tuple(image))
            return
        for w in range(n):
            if used[w] or g.degree(w) != g.degree(v):
                continue
            if all(g.has_edge(u, v) == g.has_edge(image[u], w) for u in range(v)):
                image[v], used[w] = w, True
                extend(v + 1)
                used[w] = False
        image[v] = -1

    extend(0)
    return out


def is_distinguishing(g: Graph, coloring: Sequence[int], auts: list[Permutation] | None = None) -> bool:
    """True iff no nontrivial automorphism maps every vertex to a vertex of its own color."""
    auts = automorphisms(g) if auts is None else auts
    identity = tuple(range(g.n))
    for phi in auts:
        if phi != identity and all(coloring[v] == coloring[phi[v]] for v in range(g.n)):
            return False
    return True


def colorings_classes(g: Graph, lists: Sequence[Sequence[int]]) -> tuple[int, int]:
    """Count distinguishing colorings with ``c(v) in lists[v]`` and their equivalence classes.

    Two list colorings are equivalent when an automorphism carries one onto
    the other. Automorphisms form a group, so a class is an orbit
    intersected with the list colorings; each class is identified by the
    smallest code in its full orbit.
    """
    n = g.n
    if len(lists) != n:
        raise ValueError("need one list per vertex")
    sizes = [len(set(lst)) for lst in lists]
    total = int(np.prod(sizes, dtype=object)) if n else 1
    if total > MAX_COLORINGS:
        raise ScaleLimit(f"{total} list colorings exceed the cap of {MAX_COLORINGS}")
    if n == 0:
        return 1, 1

    palette = sorted(set().union(*map(set, lists)))
    base = len(palette)
    if base**n >= 2**62:
        raise ScaleLimit("coloring codes do not fit in 64 bits")
    dense = {c: i for i, c in enumerate(palette)}
    options = [np.array(sorted(dense[c] for c in set(lst)), dtype=np.int64) for lst in lists]

    grid = np.indices(sizes, dtype=np.int16).reshape(n, -1).T
    colors = np.stack([options[v][grid[:, v]] for v in range(n)], axis=1)
    del grid
    weights = base ** np.arange(n, dtype=np.int64)
    codes = colors @ weights

    identity = tuple(range(n))
    nontrivial = [phi for phi in automorphisms(g) if phi != identity]
    # small-support automorphisms first: they discard most colorings cheaply
    nontrivial.sort(key=lambda phi: (sum(phi[v] != v for v in range(n)), phi))
    for phi in nontrivial:
        keep = colors[:, list(phi)] @ weights != codes
        if not keep.all():
            colors, codes = colors[keep], codes[keep]
        if not len(codes):
            break

    orbit_min = codes.copy()
    for phi in nontrivial:
        np.minimum(orbit_min, colors[:, list(phi)] @ weights, out=orbit_min)
    return len(codes), int(np.unique(orbit_min).size)


def oracle_distinguishing_number(g: Graph) -> int:
    """Least k with a distinguishing k-coloring, by exhaustive search over k = 1, 2, ..."""
    for k in range(1, g.n + 1):
        if brute_distinguishing(g, k)[0]:
            return k
    return max(g.n, 1)


def brute_distinguishing(g: Graph, k: int) -> tuple[int, int]:
    """(number of distinguishing k-colorings, number of their equivalence classes)."""
    if k < 1:
        raise ValueError("k must be positive")
    if k**g.n > MAX_COLORINGS:
        raise ScaleLimit(f"{k}^{g.n} colorings exceed the cap of {MAX_COLORINGS}")
    return colorings_classes(g, [range(1, k + 1)] * g.n)


# -- isomorphism classes and corpus --------------------------------------------


def canonical_form(g: Graph) -> tuple[int, int]:
    """Isomorphism-invariant (n, adjacency bits).

    Maximises the upper-triangle adjacency bitstring over every vertex order
    that sorts vertices by (degree, neighbour degrees).
    """
    n = g.n
    invariant = [(g.degree(v), tuple(sorted(g.degree(u) for u in g.adjacency[v]))) for v in range(n)]
    cells = [[v for v in range(n) if invariant[v] == key] for key in sorted(set(invariant))]
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in cells)):
        order = [v for part in parts for v in part]
        bits = 0
        for a in range(n):
            for b in range(a + 1, n):
                bits = (bits << 1) | g.has_edge(order[a], order[b])
        if best is None or bits > best:
            best = bits
    return n, best or 0


def _matchings(n: int):
    """Endpoint sequences of n unlabeled intervals: intervals numbered by opening order."""
    seq: list[tuple[int, int]] = []

    def walk(opened: int, open_now: list[int]):
        if opened == n and not open_now:
            yield list(seq)
            return
        if opened < n:
            seq.append((0, opened))
            yield from walk(opened + 1, open_now + [opened])
            seq.pop()
        for idx, iv in enumerate(open_now):
            seq.append((1, iv))
            yield from walk(opened, open_now[:idx] + open_now[idx + 1 :])
            seq.pop()

    yield from walk(0, [])


def _intervals_from_sequence(n: int, seq: list[tuple[int, int]]) -> IntervalRepresentation:
    left = [0] * n
    right = [0] * n
    for pos, (closing, iv) in enumerate(seq):
        (right if closing else left)[iv] = pos
    return IntervalRepresentation(tuple(zip(left, right)))


@lru_cache(maxsize=None)
def _corpus(n: int) -> tuple[Graph, ...]:
    labeled: set[frozenset[tuple[int, int]]] = set()
    for seq in _matchings(n):
        g = graph_from_intervals(_intervals_from_sequence(n, seq))
        if is_connected(g):
            labeled.add(frozenset(g.edges()))
    by_form: dict[tuple[int, int], Graph] = {}
    for edges in labeled:
        g = Graph.from_edges(n, edges)
        by_form.setdefault(canonical_form(g), g)
    ordered = sorted(by_form.items(), key=lambda item: (len(item[1].edges()), item[0]))
    return tuple(_relabel_canonical(g) for _, g in ordered)


def _relabel_canonical(g: Graph) -> Graph:
    """Relabel so that the graph's edge list is a pure function of its isomorphism class."""
    _, bits = canonical_form(g)
    n = g.n
    edges = []
    pos = n * (n - 1) // 2 - 1
    for a in range(n):
        for b in range(a + 1, n):
            if bits >> pos & 1:
                edges.append((a, b))
            pos -= 1
    return Graph.from_edges(n, edges)


def enumerate_interval_graphs(n: int) -> list[Graph]:
    """One graph per isomorphism class of connected interval graphs on ``n`` vertices.

    Ordered by edge count, then canonical form. Graphs are relabelled to
    their canonical vertex order so output is reproducible.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_ENUM_VERTICES:
        raise ScaleLimit(f"enumeration is capped at {MAX_ENUM_VERTICES} vertices")
    return list(_corpus(n))


def corpus_manifest(nmax: int) -> list[tuple[int, int, str]]:
    """(n, graph count, sha256 prefix of the concatenated edge lists) for each n up to ``nmax``."""
    rows = []
    for n in range(1, nmax + 1):
        graphs = enumerate_interval_graphs(n)
        digest = hashlib.sha256("".join(g.to_edge_list() for g in graphs).encode()).hexdigest()[:16]
        rows.append((n, len(graphs), digest))
    return rows


# -- random instances ----------------------------------------------------------


class LCG:
    """64-bit linear congruential stream (Knuth's MMIX constants).

    ``state <- state * 6364136223846793005 + 1442695040888963407 (mod 2**64)``,
    and each draw returns the top 31 bits of the new state. Seeded with
    ``seed mod 2**64``.
    """

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int) -> None:
        self.state = seed & self.MASK

    def next(self) -> int:
        self.state = (self.state * self.MULTIPLIER + self.INCREMENT) & self.MASK
        return self.state >> 33

    def below(self, bound: int) -> int:
        return self.next() % bound


def random_interval_graph(n: int, seed: int) -> IntervalRepresentation:
    """Uniformly interleave 2n labeled endpoints with an LCG-driven Fisher-Yates shuffle.

    The token list ``[0, 0, 1, 1, ..., n-1, n-1]`` is shuffled by swapping
    position ``i`` with ``below(i + 1)`` for ``i`` from ``2n - 1`` down to 1;
    a vertex's first occurrence is its left endpoint, the second its right.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = LCG(seed)
    tokens = [v for v in range(n) for _ in (0, 1)]
    for i in range(len(tokens) - 1, 0, -1):
        j = rng.below(i + 1)
        tokens[i], tokens[j] = tokens[j], tokens[i]
    left: dict[int, int] = {}
    right: dict[int, int] = {}
    for pos, v in enumerate(tokens):
        (right if v in left else left)[v] = pos
    return IntervalRepresentation(tuple((left[v], right[v]) for v in range(n)))
