import pytest

from conftest import K2, P4, RIGID6, STAR3
from intervaldist.counting import binomial, count_at_node, count_distinguishing, distinguishing_number, labeled
from intervaldist.errors import DisconnectedGraph, NotIntervalGraph
from intervaldist.graph import Graph
from intervaldist.oracle import automorphisms, brute_distinguishing
from intervaldist.verification import complete_graph, cycle_graph


@pytest.mark.parametrize("k, n, expected", [(3, 3, 1), (5, 2, 10), (2, 3, 0), (4, 0, 1), (0, 0, 1)])
def test_binomial(k, n, expected):
    assert binomial(k, n) == expected


def test_complete_graph_counts():
    assert count_distinguishing(K2, 3) == 3
    for n in range(1, 6):
        assert distinguishing_number(complete_graph(n)) == n


def test_p4_counts():
    lt = labeled(P4)
    assert count_at_node(lt, 0, 1) == 0
    assert count_at_node(lt, 0, 2) == 6
    # 16 two-colorings minus the 4 fixed by the reversal, over |Aut| = 2
    assert brute_distinguishing(P4, 2) == (12, 6)
    assert distinguishing_number(P4) == 2


def test_star_counts():
    assert count_distinguishing(STAR3, 3) == 3 * binomial(3, 3) == 3
    assert brute_distinguishing(STAR3, 3) == (18, 3)
    assert distinguishing_number(STAR3) == 3
    assert count_distinguishing(STAR3, 2) == 0


def test_count_rejects_bad_input():
    with pytest.raises(ValueError):
        count_at_node(labeled(P4), 0, 0)
    with pytest.raises(NotIntervalGraph):
        distinguishing_number(cycle_graph(4))
    with pytest.raises(DisconnectedGraph):
        distinguishing_number(Graph.from_edges(3, [(0, 1)]))


def test_huge_counts_are_exact():
    # 60 leaves on a star: k * C(k, 60) for k = 100 overflows any machine word
    star = Graph.from_edges(61, [(0, i) for i in range(1, 61)])
    assert count_distinguishing(star, 100) == 100 * binomial(100, 60)
    assert distinguishing_number(star) == 60


def test_positivity_is_monotone_and_k1_detects_rigidity(corpus7):
    for g in corpus7:
        lt = labeled(g)
        memo = {}
        counts = [count_at_node(lt, 0, k, memo) for k in range(1, g.n + 2)]
        first = next(i for i, c in enumerate(counts) if c > 0)
        assert all(c > 0 for c in counts[first:])
        assert (counts[0] > 0) == (len(automorphisms(g)) == 1)
        assert first + 1 == distinguishing_number(g) <= g.n
    assert count_distinguishing(RIGID6, 1) == 1


def test_sibling_subtrees_share_memo_entries():
    lt = labeled(STAR3)
    memo = {}
    count_at_node(lt, 0, 4, memo)
    # one entry for the leaf shape, one for the root
    assert len(memo) == 2
