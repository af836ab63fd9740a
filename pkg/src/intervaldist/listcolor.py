"""Distinguishing list colorings of interval graphs.

The construction walks the labeled PQ-tree bottom-up. Every node lazily
enumerates the equivalence classes of distinguishing list colorings of the
subgraph hanging below it, one representative per class:

* at a leaf or P-node, the vertices hanging there get pairwise distinct
  colors, and children with equivalent subtrees get pairwise inequivalent
  colorings (chosen in order, skipping classes already used by a sibling);
* at a Q-node, every clone class gets distinct colors and every child any
  class; the left half is fixed first and the right half is then searched,
  backtracking whenever the result reads the same in both directions.

Equivalence of colorings is decided by a colored canonical code, so only
color assignments that some automorphism could identify are merged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .counting import distinguishing_number, labeled
from .errors import GraphFormatError, ListAssignmentError, ListExhausted, NoColoringFound
from .graph import Graph
from .labeling import LabeledPQTree, clones, mirror_span, representative_sets
from .oracle import automorphisms, colorings_classes, is_distinguishing
from .pqtree import Q

__all__ = [
    "ListAssignment",
    "parse_list_file",
    "greedy_complete_coloring",
    "construct_list_coloring",
    "verify_distinguishing",
    "count_list_classes",
    "enumerate_list_classes",
    "format_coloring",
]

DEFAULT_MAX_STEPS = 1_000_000


@dataclass(frozen=True)
class ListAssignment:
    lists: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        for v, lst in enumerate(self.lists):
            if not lst:
                raise ListAssignmentError(f"vertex {v} has an empty list")
            if any(c < 0 for c in lst):
                raise ListAssignmentError(f"vertex {v} has a negative color")

    @classmethod
    def of(cls, lists: ListAssignment | Mapping[int, Iterable[int]] | Sequence[Iterable[int]]) -> ListAssignment:
        if isinstance(lists, ListAssignment):
            return lists
        if isinstance(lists, Mapping):
            lists = [lists[v] for v in range(len(lists))]
        return cls(tuple(frozenset(lst) for lst in lists))

    def __len__(self) -> int:
        return len(self.lists)

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.lists[v]

    def uniform_size(self) -> int | None:
        sizes = {len(lst) for lst in self.lists}
        return sizes.pop() if len(sizes) == 1 else None

    def to_text(self) -> str:
        k = self.uniform_size()
        if k is None:
            raise ListAssignmentError("list file format requires lists of one size")
        lines = [f"{len(self.lists)} {k}"] + [" ".join(map(str, sorted(lst))) for lst in self.lists]
        return "\n".join(lines) + "\n"


def parse_list_file(text: str) -> ListAssignment:
    """Parse ``n k`` followed by n lines of k distinct nonnegative colors."""
    lines = text.split("\n")
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise GraphFormatError("empty list file")
    try:
        header = [int(t) for t in lines[0].split()]
        rows = [[int(t) for t in line.split()] for line in lines[1:]]
    except ValueError:
        raise GraphFormatError("list file contains a non-integer token") from None
    if len(header) != 2:
        raise GraphFormatError("line 1: expected 'n k'")
    n, k = header
    if n < 0 or k < 1:
        raise GraphFormatError("line 1: need n >= 0 and k >= 1")
    if len(rows) != n:
        raise GraphFormatError(f"expected {n} list lines, found {len(rows)}")
    for lineno, row in enumerate(rows, start=2):
        if len(row) != k:
            raise GraphFormatError(f"line {lineno}: expected {k} colors, got {len(row)}")
        if len(set(row)) != k:
            raise GraphFormatError(f"line {lineno}: repeated color")
        if any(c < 0 for c in row):
            raise GraphFormatError(f"line {lineno}: negative color")
    return ListAssignment(tuple(frozenset(row) for row in rows))


def format_coloring(coloring: Mapping[int, int]) -> str:
    return "".join(f"{v} {coloring[v]}\n" for v in sorted(coloring))


def greedy_complete_coloring(vertices: Sequence[int], lists) -> dict[int, int]:
    """Give each vertex, in order, the smallest color of its list not used yet."""
    used: set[int] = set()
    out = {}
    for v in vertices:
        free = sorted(set(lists[v]) - used)
        if not free:
            raise ListExhausted(f"no unused color left in the list of vertex {v}")
        out[v] = free[0]
        used.add(free[0])
    return out


def _clique_options(vertices: Sequence[int], lists: ListAssignment) -> Iterator[dict[int, int]]:
    """Distinct-color list colorings of a clique, one per color set, greedy choice first."""
    seen: set[frozenset[int]] = set()
    chosen: dict[int, int] = {}

    def walk(i: int) -> Iterator[dict[int, int]]:
        if i == len(vertices):
            key = frozenset(chosen.values())
            if key not in seen:
                seen.add(key)
                yield dict(chosen)
            return
        v = vertices[i]
        taken = set(chosen.values())
        for c in sorted(lists[v]):
            if c not in taken:
                chosen[v] = c
                yield from walk(i + 1)
                del chosen[v]

    yield from walk(0)


class _Lazy:
    """Re-iterable cache in front of a one-shot iterator."""

    def __init__(self, source: Iterator) -> None:
        self._source = source
        self._cache: list = []
        self._done = False

    def __iter__(self) -> Iterator:
        i = 0
        while True:
            if i < len(self._cache):
                yield self._cache[i]
                i += 1
                continue
            if self._done:
                return
            try:
                item = next(self._source)
            except StopIteration:
                self._done = True
                return
            self._cache.append(item)


class _Builder:
    def __init__(self, lt: LabeledPQTree, lists: ListAssignment, max_steps: int) -> None:
        self.lt = lt
        self.lists = lists
        self.max_steps = max_steps
        self.steps = 0
        self._classes: dict[int, _Lazy] = {}

    def tick(self) -> None:
        self.steps += 1
        if self.steps > self.max_steps:
            raise NoColoringFound(f"work cap of {self.max_steps} search steps reached")

    def classes(self, x: int) -> _Lazy:
        """(coloring, colored code) for each class of distinguishing list colorings at ``x``."""
        if x not in self._classes:
            gen = self._q_classes(x) if self.lt.kind(x) == Q else self._p_classes(x)
            self._classes[x] = _Lazy(gen)
        return self._classes[x]

    def _clique_slot(self, vertices) -> _Lazy:
        opts = ((c, tuple(sorted(c.values()))) for c in _clique_options(sorted(vertices), self.lists))
        return _Lazy(opts)

    def _search(self, slots: list[_Lazy], accept) -> Iterator[list]:
        chosen: list = []

        def walk(i: int) -> Iterator[list]:
            if i == len(slots):
                yield list(chosen)
                return
            for opt in slots[i]:
                self.tick()
                if accept(i, opt, chosen):
                    chosen.append(opt)
                    yield from walk(i + 1)
                    chosen.pop()

        yield from walk(0)

    def _p_classes(self, x: int) -> Iterator[tuple[dict[int, int], tuple]]:
        kids = self.lt.children[x]
        slots = [self._clique_slot(self.lt.char_inv[x])] + [self.classes(c) for c in kids]

        def accept(i, opt, chosen):
            # sibling colorings must be pairwise inequivalent
            return i == 0 or all(opt[1] != prev[1] for prev in chosen[1:])

        seen: set[tuple] = set()
        for combo in self._search(slots, accept):
            code = ("P", combo[0][1], tuple(sorted(code for _, code in combo[1:])))
            if code in seen:
                continue
            seen.add(code)
            coloring: dict[int, int] = {}
            for part, _ in combo:
                coloring.update(part)
            yield coloring, code

    def _q_classes(self, x: int) -> Iterator[tuple[dict[int, int], tuple]]:
        lt = self.lt
        kids = lt.children[x]
        h = len(kids)
        half = (h + 1) // 2
        classes = clones(lt, x)
        _, subreps = representative_sets(lt, x)
        left_spans = [s for s, members in classes.items() if members & subreps]
        right_spans = [s for s in classes if s not in left_spans]
        order = (
            [("span", s) for s in left_spans]
            + [("child", i) for i in range(half)]
            + [("span", s) for s in right_spans]
            + [("child", i) for i in range(half, h)]
        )
        slots = [self._clique_slot(classes[key]) if kind == "span" else self.classes(kids[key]) for kind, key in order]
        seen: set[tuple] = set()

        for combo in self._search(slots, lambda i, opt, chosen: True):
            span_colors: dict = {}
            child_codes: list = [None] * h
            coloring: dict[int, int] = {}
            for (kind, key), (part, code) in zip(order, combo):
                coloring.update(part)
                if kind == "span":
                    span_colors[key] = code
                else:
                    child_codes[key] = code
            forward = (tuple(sorted((*s, c) for s, c in span_colors.items())), tuple(child_codes))
            backward = (
                tuple(sorted((*mirror_span(s, h), c) for s, c in span_colors.items())),
                tuple(reversed(child_codes)),
            )
            if forward == backward:
                # preserved by the reversal; try the next right-side choice
                continue
            code = ("Q", min(forward, backward))
            if code in seen:
                continue
            seen.add(code)
            yield coloring, code


def _checked_lists(g: Graph, lists) -> tuple[ListAssignment, int]:
    lists = ListAssignment.of(lists)
    if len(lists) != g.n:
        raise ListAssignmentError(f"{len(lists)} lists for a graph on {g.n} vertices")
    k = lists.uniform_size()
    if k is None:
        raise ListAssignmentError("lists must all have the same size")
    return lists, k


def construct_list_coloring(g: Graph, lists, max_steps: int = DEFAULT_MAX_STEPS) -> dict[int, int]:
    """A distinguishing coloring with ``c(v)`` drawn from ``lists[v]``.

    Lists must have a common size ``k >= D(G)``. Raises
    :class:`NoColoringFound` if the search is exhausted or exceeds
    ``max_steps``; with valid input that indicates a bug.
    """
    lists, k = _checked_lists(g, lists)
    needed = distinguishing_number(g)
    if k < needed:
        raise ListAssignmentError(f"lists of size {k} are shorter than D(G) = {needed}")
    builder = _Builder(labeled(g), lists, max_steps)
    for coloring, _ in builder.classes(0):
        return dict(sorted(coloring.items()))
    raise NoColoringFound("no distinguishing list coloring exists for this assignment")


def enumerate_list_classes(g: Graph, lists, max_steps: int = DEFAULT_MAX_STEPS) -> list[dict[int, int]]:
    """One representative of every class of distinguishing list colorings, via the tree.

    Lists may have any sizes here.
    """
    lists = ListAssignment.of(lists)
    if len(lists) != g.n:
        raise ListAssignmentError(f"{len(lists)} lists for a graph on {g.n} vertices")
    builder = _Builder(labeled(g), lists, max_steps)
    return [dict(sorted(c.items())) for c, _ in builder.classes(0)]


def verify_distinguishing(g: Graph, coloring: Mapping[int, int] | Sequence[int]) -> bool:
    """Check against every automorphism found by brute force."""
    colors = [coloring[v] for v in range(g.n)]
    return is_distinguishing(g, colors, automorphisms(g))


def count_list_classes(g: Graph, lists) -> int:
    """Equivalence classes of distinguishing list colorings, by exhaustive enumeration."""
    lists = ListAssignment.of(lists)
    if len(lists) != g.n:
        raise ListAssignmentError(f"{len(lists)} lists for a graph on {g.n} vertices")
    return colorings_classes(g, [sorted(lst) for lst in lists.lists])[1]
