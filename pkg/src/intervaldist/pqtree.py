"""PQ-trees over maximal cliques and interval graph recognition.

Trees are immutable: :func:`reduce` rebuilds only the nodes on the path to
the pertinent subtree and shares everything else. Nodes hash by identity,
so two structurally equal leaves in different positions stay distinct.

The reduction is the recursive form of the classical template set. For a
set ``S`` of leaves, every partial node strictly below the pertinent root
is flattened into a sequence of empty and full subtrees (empties first),
and the pertinent root splices those sequences around its full children.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import DisconnectedGraph, LimitExceeded, NotIntervalGraph, ReductionFailure
from .graph import Graph, is_connected, maximal_cliques

__all__ = [
    "PQNode",
    "PQTree",
    "build_pqtree",
    "universal_tree",
    "reversed_root",
    "leaf",
    "reduce",
    "frontier",
    "enumerate_frontiers",
    "count_frontiers",
    "check_consecutiveness",
    "is_proper",
    "tree_to_dict",
    "tree_to_json",
    "tree_to_dot",
]

P, Q, LEAF = "P", "Q", "leaf"
_EMPTY, _FULL, _PARTIAL = 0, 1, 2


@dataclass(frozen=True, eq=False)
class PQNode:
    kind: str
    children: tuple[PQNode, ...] = ()
    clique: int | None = None

    def __post_init__(self) -> None:
        if self.kind == LEAF:
            if self.children or self.clique is None:
                raise ValueError("a leaf carries a clique index and no children")
        elif self.kind not in (P, Q):
            raise ValueError(f"unknown node kind {self.kind!r}")

    @property
    def is_leaf(self) -> bool:
        return self.kind == LEAF

    @cached_property
    def leaves(self) -> frozenset[int]:
        if self.is_leaf:
            return frozenset((self.clique,))
        return frozenset().union(*(c.leaves for c in self.children))

    def frontier(self) -> list[int]:
        if self.is_leaf:
            return [self.clique]
        return [leaf for c in self.children for leaf in c.frontier()]

    def preorder(self) -> Iterator[PQNode]:
        yield self
        for c in self.children:
            yield from c.preorder()

    def __repr__(self) -> str:
        if self.is_leaf:
            return f"Leaf({self.clique})"
        return f"{self.kind}({', '.join(map(repr, self.children))})"


def leaf(clique: int) -> PQNode:
    return PQNode(LEAF, (), clique)


@dataclass(frozen=True, eq=False)
class PQTree:
    """A rooted PQ-tree; ``cliques`` records the leaf-index to clique mapping when known."""

    root: PQNode
    cliques: tuple[frozenset[int], ...] | None = None

    @cached_property
    def nodes(self) -> tuple[PQNode, ...]:
        """All nodes in preorder; a node's position is its node id (root is 0)."""
        return tuple(self.root.preorder())

    def __repr__(self) -> str:
        return f"PQTree({self.root!r})"


def frontier(t: PQTree) -> list[int]:
    return t.root.frontier()


def is_proper(t: PQTree) -> bool:
    for node in t.nodes:
        if node.kind == P and len(node.children) < 2:
            return False
        if node.kind == Q and len(node.children) < 3:
            return False
    return True


def reversed_root(t: PQTree) -> PQTree:
    """The tree with its root Q-node's children reversed (a Q transformation)."""
    if t.root.kind != Q:
        raise ValueError("root is not a Q-node")
    return PQTree(PQNode(Q, t.root.children[::-1]), t.cliques)


# -- reduction -----------------------------------------------------------------


def _status(node: PQNode, s: frozenset[int]) -> int:
    inside = node.leaves & s
    if not inside:
        return _EMPTY
    if len(inside) == len(node.leaves):
        return _FULL
    return _PARTIAL


def _group(nodes: Sequence[PQNode]) -> PQNode:
    return nodes[0] if len(nodes) == 1 else PQNode(P, tuple(nodes))


def _split(node: PQNode, s: frozenset[int]) -> tuple[list[PQNode], list[PQNode], list[PQNode]]:
    empty, full, partial = [], [], []
    for c in node.children:
        (empty, full, partial)[_status(c, s)].append(c)
    return empty, full, partial


def _partial_sequence(node: PQNode, s: frozenset[int]) -> list[PQNode]:
    """Flatten a partial non-root node into empty subtrees followed by full ones."""
    if node.kind == P:
        empty, full, partial = _split(node, s)
        if len(partial) > 1:
            raise ReductionFailure("P-node below the pertinent root has two partial children")
        seq = [_group(empty)] if empty else []
        if partial:
            seq.extend(_partial_sequence(partial[0], s))
        if full:
            seq.append(_group(full))
        return seq

    # Q-node: exactly one orientation puts the empties on the left
    if sum(_status(c, s) == _PARTIAL for c in node.children) > 1:
        raise ReductionFailure("Q-node below the pertinent root has two partial children")
    for order in (node.children, node.children[::-1]):
        seq: list[PQNode] = []
        for c in order:
            if _status(c, s) == _PARTIAL:
                seq.extend(_partial_sequence(c, s))
            else:
                seq.append(c)
        marks = [_status(c, s) for c in seq]
        if marks == sorted(marks):
            return seq
    raise ReductionFailure("Q-node children cannot be split into an empty and a full side")


def _reduce_pertinent_root(node: PQNode, s: frozenset[int]) -> PQNode:
    if node.kind == P:
        empty, full, partial = _split(node, s)
        if len(partial) > 2:
            raise ReductionFailure("pertinent P-node has more than two partial children")
        if not partial:
            return PQNode(P, tuple(empty) + (_group(full),))
        seq = _partial_sequence(partial[0], s)
        if full:
            seq.append(_group(full))
        if len(partial) == 2:
            seq.extend(reversed(_partial_sequence(partial[1], s)))
        q = PQNode(Q, tuple(seq))
        return PQNode(P, tuple(empty) + (q,)) if empty else q

    marks = [_status(c, s) for c in node.children]
    touched = [i for i, m in enumerate(marks) if m != _EMPTY]
    lo, hi = touched[0], touched[-1]
    if any(marks[i] != _FULL for i in range(lo + 1, hi)):
        raise ReductionFailure("pertinent Q-node has a gap between its full children")
    kids = list(node.children)
    left = _partial_sequence(kids[lo], s) if marks[lo] == _PARTIAL else [kids[lo]]
    right = _partial_sequence(kids[hi], s)[::-1] if marks[hi] == _PARTIAL else [kids[hi]]
    return PQNode(Q, tuple(kids[:lo] + left + kids[lo + 1 : hi] + right + kids[hi + 1 :]))


def _reduce_below(node: PQNode, s: frozenset[int]) -> PQNode:
    if node.leaves == s:
        return node
    for i, c in enumerate(node.children):
        if s <= c.leaves:
            kids = list(node.children)
            kids[i] = _reduce_below(c, s)
            return PQNode(node.kind, tuple(kids), node.clique)
    return _reduce_pertinent_root(node, s)


def _normalize(node: PQNode) -> PQNode:
    if node.is_leaf:
        return node
    kids = tuple(_normalize(c) for c in node.children)
    if len(kids) == 1:
        return kids[0]
    kind = P if len(kids) == 2 else node.kind
    if kind == node.kind and all(a is b for a, b in zip(kids, node.children)):
        return node
    return PQNode(kind, kids)


def reduce(t: PQTree, s: Iterable[int]) -> PQTree:
    """Restrict ``t`` to the frontiers in which the leaves ``s`` are consecutive.

    Raises :class:`ReductionFailure` when no such frontier exists.
    """
    s = frozenset(s)
    if not s:
        raise ValueError("reduction set must be nonempty")
    if not s <= t.root.leaves:
        raise ValueError(f"reduction set mentions unknown leaves {sorted(s - t.root.leaves)}")
    return PQTree(_normalize(_reduce_below(t.root, s)), t.cliques)


# -- recognition ---------------------------------------------------------------


def universal_tree(m: int) -> PQTree:
    if m < 1:
        raise ValueError("need at least one leaf")
    if m == 1:
        return PQTree(leaf(0))
    return PQTree(PQNode(P, tuple(leaf(i) for i in range(m))))


def build_pqtree(g: Graph) -> PQTree:
    """Proper PQ-tree whose equivalent frontiers are the consecutive clique orderings of ``g``.

    Leaf ``i`` stands for ``maximal_cliques(g)[i]``. Vertices are reduced in
    increasing id order.
    """
    if g.n == 0:
        raise ValueError("graph has no vertices")
    if not is_connected(g):
        raise DisconnectedGraph("graph is disconnected")
    cliques = tuple(maximal_cliques(g))
    root = universal_tree(len(cliques)).root
    tree = PQTree(root, cliques)
    for v in g.vertices:
        members = {i for i, c in enumerate(cliques) if v in c}
        try:
            tree = reduce(tree, members)
        except ReductionFailure as exc:
            raise NotIntervalGraph(f"cliques of vertex {v} cannot be made consecutive: {exc}") from None
    return tree


def check_consecutiveness(order: Sequence[int], g: Graph, cliques: Sequence[frozenset[int]]) -> bool:
    """True iff every vertex's cliques occupy consecutive positions of ``order``."""
    if sorted(order) != list(range(len(cliques))):
        raise ValueError("order must be a permutation of the clique indices")
    for v in g.vertices:
        positions = [pos for pos, c in enumerate(order) if v in cliques[c]]
        if positions and positions[-1] - positions[0] + 1 != len(positions):
            return False
    return True


# -- frontiers -----------------------------------------------------------------


def count_frontiers(t: PQTree) -> int:
    total = 1
    for node in t.nodes:
        if node.kind == P:
            total *= math.factorial(len(node.children))
        elif node.kind == Q:
            total *= 2
    return total


def _frontiers(node: PQNode) -> list[tuple[int, ...]]:
    if node.is_leaf:
        return [(node.clique,)]
    child_sets = [_frontiers(c) for c in node.children]
    if node.kind == P:
        orders = itertools.permutations(range(len(child_sets)))
    else:
        orders = (tuple(range(len(child_sets))), tuple(reversed(range(len(child_sets)))))
    out = []
    for order in orders:
        for combo in itertools.product(*(child_sets[i] for i in order)):
            out.append(tuple(x for part in combo for x in part))
    return out


def enumerate_frontiers(t: PQTree, limit: int = 100_000) -> set[tuple[int, ...]]:
    """Frontiers of every tree equivalent to ``t``."""
    total = count_frontiers(t)
    if total > limit:
        raise LimitExceeded(f"{total} frontiers exceed the limit of {limit}")
    return set(_frontiers(t.root))


# -- dumps ---------------------------------------------------------------------


def tree_to_dict(t: PQTree, node: PQNode | None = None) -> dict:
    node = t.root if node is None else node
    if node.is_leaf:
        out: dict = {"kind": LEAF, "clique": node.clique, "children": []}
        if t.cliques is not None:
            out["members"] = sorted(t.cliques[node.clique])
        return out
    return {"kind": node.kind, "children": [tree_to_dict(t, c) for c in node.children]}


def tree_to_json(t: PQTree) -> str:
    return json.dumps(tree_to_dict(t), sort_keys=True)


def tree_to_dot(t: PQTree, labels: dict[int, str] | None = None) -> str:
    """Graphviz source: circles for P-nodes, boxes for Q-nodes, leaves by clique members.

    ``labels`` optionally maps node ids to extra label text.
    """
    lines = ["graph pqtree {"]
    for nid, node in enumerate(t.nodes):
        extra = f"\\n{labels[nid]}" if labels and nid in labels else ""
        if node.is_leaf:
            if t.cliques is not None:
                text = "{" + ",".join(map(str, sorted(t.cliques[node.clique]))) + "}"
            else:
                text = f"C{node.clique}"
            lines.append(f'  n{nid} [shape=plaintext, label="{text}{extra}"];')
        elif node.kind == P:
            lines.append(f'  n{nid} [shape=circle, label="P{extra}"];')
        else:
            lines.append(f'  n{nid} [shape=box, label="Q{extra}"];')
    ids = {id(node): nid for nid, node in enumerate(t.nodes)}
    for nid, node in enumerate(t.nodes):
        for c in node.children:
            lines.append(f"  n{nid} -- n{ids[id(c)]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
