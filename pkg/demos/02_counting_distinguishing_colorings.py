"""
Counting distinguishing colorings
=================================

The number of inequivalent distinguishing k-colorings is computed exactly
by a postorder pass over the labeled PQ-tree. Here we tabulate it for a
few graphs and compare with brute force.
"""

from intervaldist import Graph, count_at_node, distinguishing_number, labeled
from intervaldist.labeling import canonical_code, is_reversible
from intervaldist.oracle import automorphisms, brute_distinguishing

graphs = {
    "K_4": Graph.from_edges(4, [(a, b) for a in range(4) for b in range(a + 1, 4)]),
    "P_4": Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]),
    "K_1,3": Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]),
    "P_6": Graph.from_edges(6, [(i, i + 1) for i in range(5)]),
}

for name, g in graphs.items():
    lt = labeled(g)
    counts = [count_at_node(lt, 0, k) for k in range(1, 6)]
    print(f"{name:6s} D(G) = {distinguishing_number(g)}   D(G;1..5) = {counts}")

# The recursion counts classes; brute force counts colorings, and with
# |Aut(G)| automorphisms acting freely the two differ by exactly that factor.
g = graphs["P_6"]
for k in (2, 3):
    colorings, classes = brute_distinguishing(g, k)
    print(f"P_6, k={k}: {colorings} colorings / |Aut| {len(automorphisms(g))} = {classes} classes")

# The root of a path's tree is a reversible Q-node.
lt = labeled(graphs["P_4"])
print("\nP_4 root reversible:", is_reversible(lt, 0))
print("P_4 root code:", canonical_code(lt))

# Counts are exact integers, however large.
star = Graph.from_edges(41, [(0, i) for i in range(1, 41)])
print("\nstar with 40 leaves, k = 60:", count_at_node(labeled(star), 0, 60))
