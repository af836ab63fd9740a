import itertools

import pytest

from conftest import K3, P4, RIGID6, STAR3, brute_maximal_cliques
from intervaldist.errors import ScaleLimit
from intervaldist.graph import Graph, graph_from_intervals, is_connected
from intervaldist.oracle import (
    LCG,
    automorphisms,
    brute_distinguishing,
    canonical_form,
    corpus_manifest,
    enumerate_interval_graphs,
    is_distinguishing,
    oracle_distinguishing_number,
    random_interval_graph,
)
from intervaldist.pqtree import build_pqtree
from intervaldist.verification import complete_graph, path_graph, star_graph


def naive_automorphisms(g):
    edges = set(g.edges())
    out = []
    for p in itertools.permutations(range(g.n)):
        if {tuple(sorted((p[u], p[v]))) for u, v in edges} == edges:
            out.append(p)
    return out


def test_automorphism_examples():
    assert automorphisms(K3) == list(itertools.permutations(range(3)))
    assert automorphisms(P4) == [(0, 1, 2, 3), (3, 2, 1, 0)]
    assert automorphisms(RIGID6) == [tuple(range(6))] == naive_automorphisms(RIGID6)


def test_automorphisms_match_naive_filter(corpus6):
    for g in corpus6[::3]:
        assert automorphisms(g) == naive_automorphisms(g)


def test_automorphisms_form_a_group(corpus6):
    for g in corpus6[::5]:
        group = set(automorphisms(g))
        for a, b in itertools.product(group, repeat=2):
            assert tuple(a[b[v]] for v in range(g.n)) in group
        for a in group:
            inverse = [0] * g.n
            for v, w in enumerate(a):
                inverse[w] = v
            assert tuple(inverse) in group


def test_automorphisms_cap():
    with pytest.raises(ScaleLimit):
        automorphisms(path_graph(11))


def test_brute_distinguishing_examples():
    assert brute_distinguishing(complete_graph(2), 2) == (2, 1)
    assert brute_distinguishing(P4, 2) == (12, 6)
    assert brute_distinguishing(STAR3, 3) == (18, 3)
    with pytest.raises(ScaleLimit):
        brute_distinguishing(path_graph(10), 6)


def test_brute_counts_match_direct_enumeration(corpus6):
    for g in corpus6[::4]:
        auts = automorphisms(g)
        for k in (1, 2, 3):
            good = [c for c in itertools.product(range(k), repeat=g.n) if is_distinguishing(g, c, auts)]
            orbits = {min(tuple(c[p[v]] for v in range(g.n)) for p in auts) for c in good}
            assert brute_distinguishing(g, k) == (len(good), len(orbits))
            assert len(orbits) * len(auts) == len(good)


def test_oracle_distinguishing_number():
    assert oracle_distinguishing_number(P4) == 2
    assert oracle_distinguishing_number(star_graph(4)) == 4
    assert oracle_distinguishing_number(RIGID6) == 1


def test_enumerate_small_sizes():
    assert [g.edges() for g in enumerate_interval_graphs(1)] == [[]]
    three = enumerate_interval_graphs(3)
    assert [canonical_form(g) for g in three] == [canonical_form(path_graph(3)), canonical_form(K3)]
    four = {canonical_form(g) for g in enumerate_interval_graphs(4)}
    paw = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    diamond = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    expected = {canonical_form(h) for h in (P4, STAR3, paw, diamond, complete_graph(4))}
    assert four == expected
    assert canonical_form(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])) not in four
    with pytest.raises(ScaleLimit):
        enumerate_interval_graphs(8)


def _is_interval_by_brute_force(g):
    cliques = brute_maximal_cliques(g)
    for p in itertools.permutations(range(len(cliques))):
        if all(
            max(pos) - min(pos) + 1 == len(pos)
            for pos in ([i for i, c in enumerate(p) if v in cliques[c]] for v in range(g.n))
        ):
            return True
    return False


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_corpus_matches_exhaustive_graph_search(n):
    pairs = list(itertools.combinations(range(n), 2))
    forms = set()
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])
        if is_connected(g) and _is_interval_by_brute_force(g):
            forms.add(canonical_form(g))
    assert {canonical_form(g) for g in enumerate_interval_graphs(n)} == forms


def test_corpus_sizes_and_isomorphism_uniqueness():
    sizes = [len(enumerate_interval_graphs(n)) for n in range(1, 8)]
    assert sizes == [1, 1, 2, 5, 15, 56, 250]
    for n in range(1, 8):
        graphs = enumerate_interval_graphs(n)
        assert len({canonical_form(g) for g in graphs}) == len(graphs)
        for g in graphs:
            assert is_connected(g)
            build_pqtree(g)


def test_canonical_form_is_invariant():
    g = RIGID6
    for p in itertools.islice(itertools.permutations(range(6)), 0, 720, 37):
        copy = Graph.from_edges(6, [(p[u], p[v]) for u, v in g.edges()])
        assert canonical_form(copy) == canonical_form(g)


def test_manifest_is_reproducible():
    rows = corpus_manifest(4)
    assert [(n, c) for n, c, _ in rows] == [(1, 1), (2, 1), (3, 2), (4, 5)]
    assert rows == corpus_manifest(4)


def test_lcg_stream():
    a, c, mask = 6364136223846793005, 1442695040888963407, 2**64 - 1
    state, expected = 12345, []
    for _ in range(5):
        state = (state * a + c) & mask
        expected.append(state >> 33)
    rng = LCG(12345)
    assert [rng.next() for _ in range(5)] == expected


def test_random_interval_graph():
    assert len(random_interval_graph(1, 99).intervals) == 1
    assert random_interval_graph(6, 3) == random_interval_graph(6, 3)
    assert random_interval_graph(6, 3) != random_interval_graph(6, 4)
    rep = random_interval_graph(5, 42)
    endpoints = sorted(x for iv in rep.intervals for x in iv)
    assert endpoints == list(range(10))
    # every component of the generated graph is recognized
    g = graph_from_intervals(rep)
    seen = set()
    for v in range(g.n):
        if v in seen:
            continue
        comp, stack = {v}, [v]
        while stack:
            for u in g.adjacency[stack.pop()]:
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        sub, _ = g.induced(comp)
        build_pqtree(sub)


def test_random_connected_instances_are_recognized():
    accepted = 0
    for seed in range(200):
        g = graph_from_intervals(random_interval_graph(8, seed))
        if is_connected(g):
            build_pqtree(g)
            accepted += 1
    assert accepted > 0
