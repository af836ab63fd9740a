import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import K2, K3, P4, RIGID6, STAR3
from intervaldist.counting import binomial, count_distinguishing, distinguishing_number
from intervaldist.errors import GraphFormatError, ListAssignmentError, ListExhausted, NoColoringFound
from intervaldist.graph import Graph
from intervaldist.listcolor import (
    ListAssignment,
    construct_list_coloring,
    count_list_classes,
    enumerate_list_classes,
    format_coloring,
    greedy_complete_coloring,
    parse_list_file,
    verify_distinguishing,
)
from intervaldist.oracle import automorphisms, is_distinguishing
from intervaldist.verification import complete_graph, corpus, star_graph


def test_greedy_complete_coloring():
    assert greedy_complete_coloring([0, 1], [{1, 2}, {2, 3}]) == {0: 1, 1: 2}
    assert greedy_complete_coloring([0], [{5}]) == {0: 5}
    assert greedy_complete_coloring([0, 1, 2], [{1, 2, 3}] * 3) == {0: 1, 1: 2, 2: 3}
    with pytest.raises(ListExhausted):
        greedy_complete_coloring([0, 1], [{1}, {1}])


def test_k2_construction():
    lists = [{1, 2}, {2, 3}]
    valid = [c for c in itertools.product(*lists) if is_distinguishing(K2, c)]
    assert len(valid) == 3
    c = construct_list_coloring(K2, lists)
    assert tuple(c.values()) in valid and c == {0: 1, 1: 2}


def test_rigid_graph_accepts_forced_coloring():
    lists = [{v * 3} for v in range(6)]
    assert construct_list_coloring(RIGID6, lists) == {v: v * 3 for v in range(6)}


def test_p4_construction_breaks_the_reversal():
    lists = [{1, 2}] * 4
    valid = {c for c in itertools.product((1, 2), repeat=4) if is_distinguishing(P4, c)}
    assert len(valid) == 12
    c = construct_list_coloring(P4, lists)
    assert tuple(c[v] for v in range(4)) in valid
    assert c == {0: 1, 1: 1, 2: 1, 3: 2}


def test_verify_examples():
    assert verify_distinguishing(P4, [1, 1, 1, 2])
    assert not verify_distinguishing(P4, [1, 2, 2, 1])
    assert verify_distinguishing(RIGID6, [0] * 6)
    assert verify_distinguishing(P4, {0: 1, 1: 1, 2: 1, 3: 2})


def test_count_list_classes_examples():
    assert count_list_classes(K2, [{1, 2}, {2, 3}]) == 3
    assert count_list_classes(K2, [{1, 2}, {1, 2}]) == 1 == binomial(2, 2)
    assert count_list_classes(RIGID6, [{v} for v in range(6)]) == 1


def test_construction_rejects_bad_lists():
    with pytest.raises(ListAssignmentError):
        construct_list_coloring(P4, [{1, 2}, {1, 2}, {1, 2}, {1, 2, 3}])
    with pytest.raises(ListAssignmentError):
        construct_list_coloring(STAR3, [{1, 2}] * 4)
    with pytest.raises(ListAssignmentError):
        construct_list_coloring(P4, [{1, 2}] * 3)
    with pytest.raises(ListAssignmentError):
        ListAssignment.of([set(), {1}])


def test_work_cap_reports_no_coloring():
    with pytest.raises(NoColoringFound):
        construct_list_coloring(star_graph(5), [range(5)] * 6, max_steps=3)


def test_list_file_round_trip_and_errors():
    la = parse_list_file("3 2\n1 2\n2 3\n0 4\n")
    assert la.lists == (frozenset({1, 2}), frozenset({2, 3}), frozenset({0, 4}))
    assert parse_list_file(la.to_text()) == la
    for bad in ("3 2\n1 2\n2 3\n", "1 2\n1 1\n", "1 2\n1 2 3\n", "1 2\n1 x\n", "", "1 2\n-1 2\n"):
        with pytest.raises(GraphFormatError):
            parse_list_file(bad)
    assert format_coloring({1: 5, 0: 4}) == "0 4\n1 5\n"


def _sample_cases(graphs, count, seed, uniform):
    rng = random.Random(seed)
    cases = []
    for _ in range(count):
        g = rng.choice(graphs)
        d = distinguishing_number(g)
        if uniform:
            k = d + rng.randint(0, 1)
            lists = [rng.sample(range(2 * k), k) for _ in range(g.n)]
        else:
            lists = [rng.sample(range(5), rng.randint(1, 3)) for _ in range(g.n)]
        cases.append((g, lists))
    return cases


@pytest.mark.parametrize("g, lists", _sample_cases(corpus(6), 60, 11, uniform=False))
def test_tree_enumeration_agrees_with_brute_force(g, lists):
    reps = enumerate_list_classes(g, lists)
    assert len(reps) == count_list_classes(g, lists)
    auts = automorphisms(g)
    for c in reps:
        assert all(c[v] in lists[v] for v in range(g.n))
        assert is_distinguishing(g, [c[v] for v in range(g.n)], auts)
    # representatives are pairwise inequivalent
    seen = set()
    for c in reps:
        orbit_min = min(tuple(c[p[v]] for v in range(g.n)) for p in auts)
        assert orbit_min not in seen
        seen.add(orbit_min)


@pytest.mark.parametrize("g, lists", _sample_cases(corpus(6), 60, 12, uniform=True))
def test_list_count_bounds_color_count(g, lists):
    k = len(lists[0])
    assert count_list_classes(g, lists) >= count_distinguishing(g, k)


@given(st.integers(1, 5), st.data())
@settings(max_examples=60, deadline=None)
def test_complete_graph_list_bound(n, data):
    k = data.draw(st.integers(n, n + 2))
    lists = [data.draw(st.lists(st.integers(0, 2 * k), min_size=k, max_size=k, unique=True)) for _ in range(n)]
    assert count_list_classes(complete_graph(n), lists) >= binomial(k, n)


@given(st.data())
@settings(max_examples=120, deadline=None)
def test_construction_output_is_valid(data):
    graphs = corpus(6)
    g = data.draw(st.sampled_from(graphs))
    k = distinguishing_number(g) + data.draw(st.integers(0, 1))
    palette = data.draw(st.integers(k, 2 * k + 2))
    lists = [data.draw(st.lists(st.integers(0, palette - 1), min_size=k, max_size=k, unique=True)) for _ in range(g.n)]
    c = construct_list_coloring(g, lists)
    assert all(c[v] in lists[v] for v in range(g.n))
    assert verify_distinguishing(g, c)
    assert construct_list_coloring(g, lists) == c
