"""
Recognizing interval graphs with PQ-trees
=========================================

Build the PQ-tree of a few small graphs, look at the orderings of maximal
cliques it encodes, and watch a 4-cycle get rejected.
"""

from intervaldist import Graph, NotIntervalGraph, build_pqtree, enumerate_frontiers, maximal_cliques
from intervaldist.graph import graph_from_intervals
from intervaldist.pqtree import tree_to_json

# A path on four vertices has three maximal cliques, and only two orderings
# of them keep every vertex's cliques next to each other.
p4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
print("cliques of P_4:", [sorted(c) for c in maximal_cliques(p4)])
t = build_pqtree(p4)
print("PQ-tree:", t)
print("orderings:", sorted(enumerate_frontiers(t)))

# Graphs can also come from intervals. Touching endpoints count as overlap.
g = graph_from_intervals([(0, 4), (1, 2), (3, 6), (5, 7), (5, 8)])
t = build_pqtree(g)
print("\nintervals -> edges:", g.edges())
print("tree as JSON:", tree_to_json(t))
print("number of valid clique orderings:", len(enumerate_frontiers(t)))

# The 4-cycle is the smallest connected graph that is not an interval graph.
c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
try:
    build_pqtree(c4)
except NotIntervalGraph as exc:
    print("\nC_4 rejected:", exc)
