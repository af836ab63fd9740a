import itertools

import pytest

from intervaldist.graph import Graph
from intervaldist.verification import complete_graph, corpus, cycle_graph, path_graph, star_graph


def brute_maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """Every vertex subset that is complete and cannot be extended."""
    found = []
    for r in range(1, g.n + 1):
        for subset in itertools.combinations(range(g.n), r):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(subset, 2)):
                found.append(frozenset(subset))
    return sorted((c for c in found if not any(c < d for d in found)), key=sorted)


def consecutive_orders(m: int, sets) -> set[tuple[int, ...]]:
    """Orders of range(m) in which every set occupies consecutive positions."""
    out = set()
    for p in itertools.permutations(range(m)):
        pos = {x: i for i, x in enumerate(p)}
        if all(max(pos[x] for x in s) - min(pos[x] for x in s) + 1 == len(s) for s in sets):
            out.add(p)
    return out


@pytest.fixture(scope="session")
def corpus7():
    return corpus(7)


@pytest.fixture(scope="session")
def corpus6():
    return corpus(6)


K2 = complete_graph(2)
K3 = complete_graph(3)
P4 = path_graph(4)
STAR3 = star_graph(3)
C4 = cycle_graph(4)
C5 = cycle_graph(5)
# triangle 3-4-5 with pendant path 5-2-0 and pendant 4-1: no nontrivial automorphism
RIGID6 = Graph.from_edges(6, [(0, 2), (1, 4), (2, 5), (3, 4), (3, 5), (4, 5)])
# P_4 plus a true twin (vertex 4) of vertex 1
P4_TWIN = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4)])
