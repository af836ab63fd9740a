"""
Cross-checking against brute force
==================================

Enumerate every connected interval graph on up to six vertices and
compare the tree-based results with the exhaustive oracle.
"""

from intervaldist.oracle import corpus_manifest
from intervaldist.verification import (
    check_distinguishing_numbers,
    check_frontier_exactness,
    check_list_coloring_trials,
    check_recursion_vs_oracle,
)

for n, count, digest in corpus_manifest(6):
    print(f"n={n}: {count} connected interval graphs (sha256 {digest})")

print()
for result in (
    check_recursion_vs_oracle(nmax=6),
    check_distinguishing_numbers(nmax=6),
    check_frontier_exactness(nmax=6),
    check_list_coloring_trials(nmax=6, trials=200, seed=1),
):
    print(result.line())
