"""Exit criteria, each run at full scale with exact comparisons.

Every test prints one PASS/FAIL line. Run standalone with
``python tests/test_acceptance.py`` or through pytest.
"""

import pytest

from intervaldist.verification import (
    check_closed_forms,
    check_distinguishing_numbers,
    check_frontier_exactness,
    check_list_coloring_trials,
    check_main_inequality,
    check_recursion_vs_oracle,
    check_structural_invariants,
)

CRITERIA = [
    ("1 recursion vs oracle, n<=7, k=1..4", lambda: check_recursion_vs_oracle(nmax=7, ks=(1, 2, 3, 4)), None),
    ("2 distinguishing numbers, n<=7", lambda: check_distinguishing_numbers(nmax=7), None),
    ("3 closed forms K_n, P_4, K_1,3", check_closed_forms, None),
    ("4 list coloring trials, n<=7, k=D(G), palette 2k", lambda: check_list_coloring_trials(7, 1500, seed=2024), 1000),
    ("5 D(G;L) >= D(G;k), n<=6, k in {D, D+1}", lambda: check_main_inequality(6, 400, seed=2024), 200),
    ("6 frontier exactness, <=6 cliques; C_4, C_5 rejected", lambda: check_frontier_exactness(7, 6), None),
    ("7 structural invariants, n<=7", lambda: check_structural_invariants(7, code_nmax=6, seed=2024), None),
]


@pytest.mark.parametrize("label, check, min_cases", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(label, check, min_cases, capsys):
    result = check()
    with capsys.disabled():
        print(f"\n[criterion {label}] {result.line()}")
    assert result.cases > 0
    if min_cases is not None:
        assert result.cases >= min_cases
    assert result.passed, result.failures[:5]


if __name__ == "__main__":
    import sys

    results = [(label, check()) for label, check, _ in CRITERIA]
    for label, result in results:
        print(f"[criterion {label}] {result.line()}")
    sys.exit(0 if all(r.passed for _, r in results) else 1)
