"""
Distinguishing list colorings
=============================

Give every vertex its own list of D(G) colors. A distinguishing coloring
drawn from those lists always exists for interval graphs; this script
builds one and checks the class-count inequality against brute force.
"""

import random

from intervaldist import (
    Graph,
    construct_list_coloring,
    count_distinguishing,
    count_list_classes,
    distinguishing_number,
    verify_distinguishing,
)

# A caterpillar-like interval graph with symmetric ends.
g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 6), (4, 6), (2, 6), (3, 6)])
k = distinguishing_number(g)
print("D(G) =", k)

rng = random.Random(3)
for trial in range(3):
    lists = [sorted(rng.sample(range(2 * k), k)) for _ in range(g.n)]
    coloring = construct_list_coloring(g, lists)
    print(f"\nlists    {lists}")
    print(f"coloring {[coloring[v] for v in range(g.n)]}  distinguishing: {verify_distinguishing(g, coloring)}")
    print(f"classes with these lists: {count_list_classes(g, lists)} >= D(G;{k}) = {count_distinguishing(g, k)}")
