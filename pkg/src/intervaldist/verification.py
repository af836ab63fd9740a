"""Cross-checks of the tree-based computations against the brute-force oracle.

Each ``check_*`` function runs one family of comparisons and returns a
:class:`CheckResult`; the ``verify`` CLI command and the acceptance tests
both drive them.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .counting import binomial, count_at_node, distinguishing_number, labeled
from .errors import NotIntervalGraph
from .graph import Graph
from .labeling import LabeledPQTree, canonical_code, is_reversible
from .listcolor import construct_list_coloring, count_list_classes, verify_distinguishing
from .oracle import (
    automorphisms,
    brute_distinguishing,
    enumerate_interval_graphs,
    oracle_distinguishing_number,
)
from .pqtree import Q, build_pqtree, check_consecutiveness, enumerate_frontiers

__all__ = [
    "CheckResult",
    "corpus",
    "complete_graph",
    "path_graph",
    "star_graph",
    "cycle_graph",
    "oracle_reverses",
    "check_recursion_vs_oracle",
    "check_distinguishing_numbers",
    "check_closed_forms",
    "check_list_coloring_trials",
    "check_main_inequality",
    "check_frontier_exactness",
    "check_structural_invariants",
    "run_all",
]


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.cases} cases, {len(self.failures)} failures"
        if self.failures:
            text += f" (first: {self.failures[0]})"
        return text


def corpus(nmax: int) -> list[Graph]:
    return [g for n in range(1, nmax + 1) for g in enumerate_interval_graphs(n)]


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _describe(g: Graph) -> str:
    return f"n={g.n} edges={g.edges()}"


def check_recursion_vs_oracle(nmax: int = 7, ks=(1, 2, 3, 4)) -> CheckResult:
    result = CheckResult("recursion equals oracle class count")
    for g in corpus(nmax):
        lt = labeled(g)
        group_order = len(automorphisms(g))
        for k in ks:
            result.cases += 1
            ours = count_at_node(lt, 0, k)
            colorings, classes = brute_distinguishing(g, k)
            if ours != classes or classes * group_order != colorings:
                result.fail(f"{_describe(g)} k={k}: recursion {ours}, oracle {classes} ({colorings} colorings)")
    return result


def check_distinguishing_numbers(nmax: int = 7) -> CheckResult:
    result = CheckResult("distinguishing number equals oracle minimum k")
    for g in corpus(nmax):
        result.cases += 1
        ours, theirs = distinguishing_number(g), oracle_distinguishing_number(g)
        if ours != theirs:
            result.fail(f"{_describe(g)}: recursion {ours}, oracle {theirs}")
    return result


def check_closed_forms() -> CheckResult:
    result = CheckResult("closed forms for K_n, P_4, K_1,3")
    for n in range(1, 9):
        lt = labeled(complete_graph(n))
        for k in range(1, 9):
            result.cases += 1
            if count_at_node(lt, 0, k) != binomial(k, n):
                result.fail(f"D(K_{n};{k}) != C({k},{n})")
        result.cases += 1
        if distinguishing_number(complete_graph(n)) != n:
            result.fail(f"D(K_{n}) != {n}")

    p4 = labeled(path_graph(4))
    for k in range(1, 7):
        result.cases += 1
        if count_at_node(p4, 0, k) != (k**4 - k**2) // 2:
            result.fail(f"D(P_4;{k}) != ({k}^4 - {k}^2)/2")
    star = labeled(star_graph(3))
    for k in range(1, 7):
        result.cases += 1
        if count_at_node(star, 0, k) != k * binomial(k, 3):
            result.fail(f"D(K_1,3;{k}) != {k}*C({k},3)")
    for g, expected, name in ((path_graph(4), 2, "P_4"), (star_graph(3), 3, "K_1,3")):
        result.cases += 1
        if distinguishing_number(g) != expected:
            result.fail(f"D({name}) != {expected}")
    # the hand-evaluated forms must agree with brute force too
    for k in range(1, 5):
        result.cases += 2
        if brute_distinguishing(path_graph(4), k)[1] != (k**4 - k**2) // 2:
            result.fail(f"oracle disagrees with D(P_4;{k})")
        if brute_distinguishing(star_graph(3), k)[1] != k * binomial(k, 3):
            result.fail(f"oracle disagrees with D(K_1,3;{k})")
    return result


def _random_lists(rng: random.Random, n: int, k: int, palette: int) -> list[list[int]]:
    return [sorted(rng.sample(range(palette), k)) for _ in range(n)]


def check_list_coloring_trials(nmax: int = 7, trials: int = 1000, seed: int = 0) -> CheckResult:
    result = CheckResult("list coloring with |L(v)| = D(G) is distinguishing")
    rng = random.Random(seed)
    graphs = corpus(nmax)
    dnum = {id(g): distinguishing_number(g) for g in graphs}
    for _ in range(trials):
        g = rng.choice(graphs)
        k = dnum[id(g)]
        lists = _random_lists(rng, g.n, k, 2 * k)
        result.cases += 1
        try:
            coloring = construct_list_coloring(g, lists)
        except Exception as exc:  # any failure here is a counterexample worth reporting
            result.fail(f"{_describe(g)} lists={lists}: {type(exc).__name__}: {exc}")
            continue
        if any(coloring[v] not in lists[v] for v in range(g.n)):
            result.fail(f"{_describe(g)} lists={lists}: color outside list")
        elif not verify_distinguishing(g, coloring):
            result.fail(f"{_describe(g)} lists={lists}: coloring {coloring} not distinguishing")
    return result


def check_main_inequality(nmax: int = 6, trials: int = 200, seed: int = 0) -> CheckResult:
    result = CheckResult("D(G;L) >= D(G;k) for uniform lists of size k")
    rng = random.Random(seed)
    graphs = corpus(nmax)
    for t in range(trials):
        g = rng.choice(graphs)
        k = distinguishing_number(g) + t % 2
        lists = _random_lists(rng, g.n, k, 2 * k)
        result.cases += 1
        lower = count_at_node(labeled(g), 0, k)
        got = count_list_classes(g, lists)
        if got < lower:
            result.fail(f"{_describe(g)} lists={lists}: D(G;L)={got} < D(G;{k})={lower}")
    return result


def check_frontier_exactness(nmax: int = 7, max_cliques: int = 6) -> CheckResult:
    result = CheckResult("PQ-tree frontiers equal consecutive clique orderings")
    for g in corpus(nmax):
        t = build_pqtree(g)
        m = len(t.cliques)
        if m > max_cliques:
            continue
        result.cases += 1
        valid = {p for p in itertools.permutations(range(m)) if check_consecutiveness(p, g, t.cliques)}
        if enumerate_frontiers(t) != valid:
            result.fail(f"{_describe(g)}: frontier set differs from consecutive orderings")
    for n in (4, 5):
        result.cases += 1
        try:
            build_pqtree(cycle_graph(n))
            result.fail(f"C_{n} accepted as an interval graph")
        except NotIntervalGraph:
            pass
    return result


def oracle_reverses(lt: LabeledPQTree, x: int, auts=None) -> bool:
    """Whether some automorphism maps the cliques under child i of ``x`` onto those under child h+1-i."""
    g, cliques = lt.graph, lt.tree.cliques
    index = {c: i for i, c in enumerate(cliques)}
    kids = [lt.nodes[c].leaves for c in lt.children[x]]
    for phi in automorphisms(g) if auts is None else auts:
        image = {i: index[frozenset(phi[v] for v in c)] for i, c in enumerate(cliques)}
        if all({image[c] for c in kid} == mirrored for kid, mirrored in zip(kids, reversed(kids))):
            return True
    return False


def check_structural_invariants(nmax: int = 7, code_nmax: int = 6, seed: int = 0) -> CheckResult:
    result = CheckResult("char partition, span consistency, reversibility, canonical codes")
    rng = random.Random(seed)
    codes: dict[tuple[int, str], Graph] = {}
    for g in corpus(nmax):
        lt = labeled(g)
        auts = automorphisms(g)
        result.cases += 1
        if sum(len(s) for s in lt.char_inv) != g.n or set().union(*lt.char_inv) != set(g.vertices):
            result.fail(f"{_describe(g)}: char^-1 sets do not partition V")
        for v in g.vertices:
            x = lt.char[v]
            if lt.nodes[x].is_leaf:
                continue
            mine = {i for i, c in enumerate(lt.tree.cliques) if v in c}
            i, j = lt.span(v)
            covered = set().union(*(lt.nodes[lt.children[x][p - 1]].leaves for p in range(i, j + 1)))
            if covered != mine:
                result.fail(f"{_describe(g)}: span of {v} covers {covered}, cliques {mine}")
        for x in range(len(lt.nodes)):
            if lt.kind(x) == Q and is_reversible(lt, x) != oracle_reverses(lt, x, auts):
                result.fail(f"{_describe(g)}: reversibility of node {x} disagrees with oracle")
        if g.n <= code_nmax:
            # corpus graphs are pairwise non-isomorphic; shuffled copies are isomorphic
            code = canonical_code(lt)
            if (g.n, code) in codes:
                result.fail(f"{_describe(g)} and {_describe(codes[(g.n, code)])} share a root code")
            codes[(g.n, code)] = g
            perm = list(g.vertices)
            rng.shuffle(perm)
            copy = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
            if canonical_code(labeled(copy)) != code:
                result.fail(f"{_describe(g)}: relabelled copy has a different root code")
    return result


def run_all(nmax: int = 7, trials: int = 1000, seed: int = 0) -> list[CheckResult]:
    return [
        check_recursion_vs_oracle(nmax),
        check_distinguishing_numbers(nmax),
        check_closed_forms(),
        check_list_coloring_trials(nmax, trials, seed),
        check_main_inequality(min(nmax, 6), max(trials // 5, 1), seed),
        check_frontier_exactness(nmax),
        check_structural_invariants(nmax, seed=seed),
    ]
