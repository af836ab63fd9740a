"""Characteristic nodes, spans, canonical codes and Q-node symmetry.

Node ids are preorder positions in ``tree.nodes``; the root is node 0.
Spans are 1-based ``(i, j)`` index pairs over a node's children.

Canonical codes are strings built from length-prefixed tokens, so the
encoding is injective. Two nodes get the same code exactly when their
labeled subtrees are equivalent under P-permutations and Q-reversals, with
the vertices that hang at each node (and their spans) carried along.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property

from .errors import InvariantError
from .graph import Graph
from .pqtree import LEAF, P, Q, PQNode, PQTree, tree_to_dict, tree_to_dot

__all__ = [
    "LabeledPQTree",
    "label_tree",
    "canonical_code",
    "isomorphism_classes",
    "clones",
    "twins_and_older",
    "representative_sets",
    "is_reversible",
    "mirror_span",
    "labeled_to_json",
    "labeled_to_dot",
]

Span = tuple[int, int]


def mirror_span(span: Span, h: int) -> Span:
    i, j = span
    return (h + 1 - j, h + 1 - i)


def _token(text: str) -> str:
    return f"{len(text)}:{text}"


@dataclass(frozen=True, eq=False)
class LabeledPQTree:
    graph: Graph
    tree: PQTree
    char: tuple[int, ...]
    char_inv: tuple[frozenset[int], ...]
    spans: dict[int, Span] = field(repr=False)

    @property
    def nodes(self) -> tuple[PQNode, ...]:
        return self.tree.nodes

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        """Child node ids of every node, left to right."""
        index = {id(node): nid for nid, node in enumerate(self.nodes)}
        return tuple(tuple(index[id(c)] for c in node.children) for node in self.nodes)

    @cached_property
    def subtree_vertices(self) -> tuple[frozenset[int], ...]:
        """Vertex set of the subgraph hanging at each node (its own and all descendants')."""
        out: list[frozenset[int]] = [frozenset()] * len(self.nodes)
        for nid in reversed(range(len(self.nodes))):
            out[nid] = self.char_inv[nid].union(*(out[c] for c in self.children[nid]))
        return tuple(out)

    def kind(self, x: int) -> str:
        return self.nodes[x].kind

    def span(self, v: int) -> Span | None:
        """Span of ``v`` at its characteristic node; ``[1, h]`` at P-nodes, None at leaves."""
        x = self.char[v]
        if self.kind(x) == Q:
            return self.spans[v]
        if self.kind(x) == P:
            return (1, len(self.children[x]))
        return None

    def label(self, x: int) -> int | list[Span]:
        """The classical node label: a count at P-nodes and leaves, a span multiset at Q-nodes."""
        if self.kind(x) == Q:
            return sorted(self.spans[v] for v in self.char_inv[x])
        return len(self.char_inv[x])

    @cached_property
    def _codes(self) -> tuple[str, ...]:
        codes: list[str] = [""] * len(self.nodes)
        for x in reversed(range(len(self.nodes))):
            kids = [codes[c] for c in self.children[x]]
            kind = self.kind(x)
            if kind == LEAF:
                codes[x] = f"L{len(self.char_inv[x])}"
            elif kind == P:
                body = "".join(_token(c) for c in sorted(kids))
                codes[x] = f"P{len(self.char_inv[x])}({body})"
            else:
                fwd, rev = _q_orientations(self, x, kids)
                codes[x] = min(fwd, rev)
        return tuple(codes)


def _span_counts(lt: LabeledPQTree, x: int) -> dict[Span, int]:
    counts: dict[Span, int] = defaultdict(int)
    for v in lt.char_inv[x]:
        counts[lt.spans[v]] += 1
    return counts


def _q_orientations(lt: LabeledPQTree, x: int, kids: list[str]) -> tuple[str, str]:
    h = len(kids)
    counts = _span_counts(lt, x)

    def encode(spans: list[tuple[int, int, int]], seq: list[str]) -> str:
        span_part = ";".join(f"{i},{j},{m}" for i, j, m in sorted(spans))
        return f"Q[{_token(span_part)}]({''.join(_token(c) for c in seq)})"

    forward = encode([(i, j, m) for (i, j), m in counts.items()], kids)
    backward = encode([(*mirror_span(s, h), m) for s, m in counts.items()], kids[::-1])
    return forward, backward


def label_tree(g: Graph, t: PQTree) -> LabeledPQTree:
    """Attach characteristic vertices and spans to ``t = build_pqtree(g)``."""
    if t.cliques is None:
        raise ValueError("tree carries no clique table; build it with build_pqtree")
    nodes = t.nodes
    index = {id(node): nid for nid, node in enumerate(nodes)}
    vertex_cliques = [frozenset(i for i, c in enumerate(t.cliques) if v in c) for v in g.vertices]

    char = []
    spans: dict[int, Span] = {}
    for v in g.vertices:
        mine = vertex_cliques[v]
        node = t.root
        while True:
            deeper = [c for c in node.children if mine <= c.leaves]
            if not deeper:
                break
            node = deeper[0]
        x = index[id(node)]
        char.append(x)
        if node.is_leaf:
            continue
        hit = [pos for pos, c in enumerate(node.children, start=1) if c.leaves & mine]
        span = (hit[0], hit[-1])
        covered = frozenset().union(*(node.children[p - 1].leaves for p in range(span[0], span[1] + 1)))
        if covered != mine:
            raise InvariantError(f"vertex {v}: children {span} do not cover exactly its cliques")
        if node.kind == P and span != (1, len(node.children)):
            raise InvariantError(f"vertex {v} at a P-node does not span all children")
        if node.kind == Q:
            spans[v] = span

    char_inv: list[set[int]] = [set() for _ in nodes]
    for v, x in enumerate(char):
        char_inv[x].add(v)
    return LabeledPQTree(g, t, tuple(char), tuple(frozenset(s) for s in char_inv), spans)


def canonical_code(lt: LabeledPQTree, x: int = 0) -> str:
    return lt._codes[x]


def isomorphism_classes(lt: LabeledPQTree, x: int) -> list[list[int]]:
    """Children of a P-node grouped by canonical code, classes ordered by code."""
    if lt.kind(x) != P:
        raise ValueError(f"node {x} is not a P-node")
    groups: dict[str, list[int]] = defaultdict(list)
    for c in lt.children[x]:
        groups[lt._codes[c]].append(c)
    return [groups[code] for code in sorted(groups)]


def _require_q(lt: LabeledPQTree, x: int) -> int:
    if lt.kind(x) != Q:
        raise ValueError(f"node {x} is not a Q-node")
    return len(lt.children[x])


def clones(lt: LabeledPQTree, x: int) -> dict[Span, frozenset[int]]:
    """Vertices at Q-node ``x`` grouped by span, keyed and ordered by span."""
    _require_q(lt, x)
    groups: dict[Span, set[int]] = defaultdict(set)
    for v in lt.char_inv[x]:
        groups[lt.spans[v]].add(v)
    return {s: frozenset(groups[s]) for s in sorted(groups)}


def twins_and_older(lt: LabeledPQTree, x: int) -> dict[Span, tuple[Span | None, bool]]:
    """For each clone class (by span): its twin class's span, if present, and whether it is older.

    A class is older when ``i >= h + 1 - j``; a mirror-symmetric span is its own older twin.
    """
    h = _require_q(lt, x)
    classes = clones(lt, x)
    out = {}
    for span in classes:
        mirrored = mirror_span(span, h)
        out[span] = (mirrored if mirrored in classes else None, span[0] >= h + 1 - span[1])
    return out


def representative_sets(lt: LabeledPQTree, x: int) -> tuple[frozenset[int], frozenset[int]]:
    """A representative set (one vertex per clone class) and its subrepresentative subset.

    The subset keeps the older class of every twin pair and every class that
    has no twin at all, since nothing else can stand in for it.
    """
    info = twins_and_older(lt, x)
    reps = {span: min(members) for span, members in clones(lt, x).items()}
    sub = {reps[s] for s, (twin, older) in info.items() if older or twin is None}
    return frozenset(reps.values()), frozenset(sub)


def is_reversible(lt: LabeledPQTree, x: int) -> bool:
    """Whether some automorphism maps the i-th child subgraph of ``x`` to the (h+1-i)-th."""
    h = _require_q(lt, x)
    kids = [lt._codes[c] for c in lt.children[x]]
    if kids != kids[::-1]:
        return False
    counts = _span_counts(lt, x)
    return all(counts.get(mirror_span(s, h), 0) == m for s, m in counts.items())


# -- dumps ---------------------------------------------------------------------


def _labeled_dict(lt: LabeledPQTree, x: int) -> dict:
    node = lt.nodes[x]
    out = tree_to_dict(lt.tree, node)
    out["char_vertices"] = sorted(lt.char_inv[x])
    if node.kind == Q:
        out["spans"] = [[v, *lt.spans[v]] for v in sorted(lt.char_inv[x])]
    if not node.is_leaf:
        out["children"] = [_labeled_dict(lt, c) for c in lt.children[x]]
    return out


def labeled_to_json(lt: LabeledPQTree) -> str:
    return json.dumps(_labeled_dict(lt, 0), sort_keys=True)


def labeled_to_dot(lt: LabeledPQTree) -> str:
    labels = {}
    for x in range(len(lt.nodes)):
        if lt.kind(x) == Q:
            labels[x] = " ".join(f"{v}:[{i},{j}]" for v, (i, j) in sorted((v, lt.spans[v]) for v in lt.char_inv[x]))
        elif lt.char_inv[x]:
            labels[x] = "{" + ",".join(map(str, sorted(lt.char_inv[x]))) + "}"
    return tree_to_dot(lt.tree, labels)
