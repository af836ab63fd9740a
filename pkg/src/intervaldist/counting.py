"""Exact counts of distinguishing colorings by postorder recursion over the labeled PQ-tree.

``count_at_node(lt, x, k)`` is the number of equivalence classes of
distinguishing k-colorings of the subgraph hanging at node ``x``. Values
are Python ints, so nothing overflows.
"""

from __future__ import annotations

import math

from .errors import InvariantError
from .graph import Graph
from .labeling import (
    LabeledPQTree,
    canonical_code,
    clones,
    is_reversible,
    isomorphism_classes,
    label_tree,
    representative_sets,
)
from .pqtree import Q, build_pqtree

__all__ = ["binomial", "count_at_node", "count_distinguishing", "distinguishing_number", "labeled"]


def binomial(k: int, n: int) -> int:
    """C(k, n), zero when ``n > k``."""
    if n < 0 or k < 0:
        return 0
    return math.comb(k, n)


def labeled(g: Graph) -> LabeledPQTree:
    """Build and label the PQ-tree of a connected interval graph."""
    return label_tree(g, build_pqtree(g))


def _count(lt: LabeledPQTree, x: int, k: int, memo: dict[tuple[str, int], int]) -> int:
    key = (canonical_code(lt, x), k)
    if key in memo:
        return memo[key]

    kids = lt.children[x]
    if lt.kind(x) != Q:
        # leaves behave as P-nodes without children
        total = binomial(k, len(lt.char_inv[x]))
        if kids:
            for group in isomorphism_classes(lt, x):
                total *= binomial(_count(lt, group[0], k, memo), len(group))
    else:
        h = len(kids)
        classes = clones(lt, x)
        class_of = {v: span for span, members in classes.items() for v in members}
        reps, subreps = representative_sets(lt, x)
        child_counts = [_count(lt, c, k, memo) for c in kids]

        whole = math.prod(binomial(k, len(classes[class_of[a]])) for a in reps)
        whole *= math.prod(child_counts)
        if not is_reversible(lt, x):
            total = whole
        else:
            mirrored = math.prod(binomial(k, len(classes[class_of[a]])) for a in subreps)
            mirrored *= math.prod(child_counts[: (h + 1) // 2])
            diff = whole - mirrored
            if diff < 0 or diff % 2:
                raise InvariantError(f"reversible Q-node {x}: {whole} - {mirrored} is not a nonnegative even number")
            total = diff // 2

    memo[key] = total
    return total


def count_at_node(lt: LabeledPQTree, x: int, k: int, memo: dict | None = None) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    return _count(lt, x, k, {} if memo is None else memo)


def count_distinguishing(g: Graph, k: int) -> int:
    """D(G;k) for a connected interval graph."""
    return count_at_node(labeled(g), 0, k)


def distinguishing_number(g: Graph) -> int:
    """Least k with a distinguishing k-coloring; raises on disconnected or non-interval graphs."""
    lt = labeled(g)
    memo: dict = {}
    for k in range(1, g.n + 1):
        if count_at_node(lt, 0, k, memo) > 0:
            return k
    raise InvariantError("no distinguishing coloring with n colors")
