"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` or ``python3 tests/test_acceptance.py``.
All comparisons are exact rational equalities.
"""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import sympy_yang_baxter_residual  # noqa: E402
from yangian.algebra import basis_enumerate  # noqa: E402
from yangian.verify import (  # noqa: E402
    check_antipode_square,
    check_bialgebra_duality,
    check_central_series,
    check_double_yangian,
    check_gram_pbw,
    check_hopf_axioms,
    check_operator_identities,
    check_pairing_values,
    check_relation_equivalence,
    check_separation,
    check_universal_r,
    check_yang_baxter,
)


def _multiset_count(s: int, n: int) -> int:
    coeffs = [1] + [0] * s
    for r in range(1, s + 1):
        for _ in range(n * n):
            for t in range(r, s + 1):
                coeffs[t] += coeffs[t - r]
    return coeffs[s]


def criterion_1():
    results = check_yang_baxter((1, 2, 3, 4)) + check_operator_identities((1, 2, 3, 4))
    oracle = all(sympy_yang_baxter_residual(n).is_zero_matrix for n in (1, 2, 3, 4))
    return results, oracle


def criterion_2():
    return check_relation_equivalence(n=2, max_level=3), True


def criterion_3():
    results = check_gram_pbw(n=2, max_degree=4)
    counts = [len(basis_enumerate("Y", s, 2)) for s in range(5)]
    oracle = counts == [_multiset_count(s, 2) for s in range(5)] and counts[2] == 14
    return results, oracle


def criterion_4():
    return check_pairing_values(n=2, max_level=4, max_degree=4), True


def criterion_5():
    return check_hopf_axioms(n=2, max_level=3, D=5), True


def criterion_6():
    return check_central_series(n=2, r_max=4, s_max=3, D=5, grouplike_order=4), True


def criterion_7():
    return check_antipode_square(n=2, K=3), True


def criterion_8():
    return check_universal_r(n=2, D=4), True


def criterion_9():
    return check_bialgebra_duality(n=2, samples=100, seed=0, max_degree=3), True


def criterion_10():
    return check_double_yangian(n=2, samples=200, seed=0, D=5, max_len=5), True


def criterion_11():
    return check_separation(n=2, samples=20, seed=0, n_max=4), True


CRITERIA = {
    1: ("Yang-Baxter, N=1..4", criterion_1),
    2: ("relation equivalence, r,s<=3, N=2", criterion_2),
    3: ("PBW via Gram matrices, s=0..4, N=2", criterion_3),
    4: ("pairing values and vanishing", criterion_4),
    5: ("Hopf axioms, levels<=3, N=2, D=5", criterion_5),
    6: ("central series", criterion_6),
    7: ("S^2 formula, r<=3, N=2", criterion_7),
    8: ("universal R-matrix, D=4, N=2", criterion_8),
    9: ("bialgebra duality, 100 seeded triples", criterion_9),
    10: ("double Yangian consistency", criterion_10),
    11: ("separation harness, 20 seeded elements", criterion_11),
}


def evaluate(k: int) -> tuple[bool, str]:
    title, run = CRITERIA[k]
    results, oracle = run()
    failed = [r for r in results if not r.passed]
    passed = not failed and oracle
    detail = f"{len(results) - len(failed)}/{len(results)} checks"
    if not oracle:
        detail += ", independent oracle disagrees"
    for r in failed:
        detail += f"\n    {r.line()}"
    return passed, f"{'PASS' if passed else 'FAIL'} criterion {k}: {title} ({detail})"


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, capsys):
    passed, line = evaluate(k)
    with capsys.disabled():
        print(f"\n{line}")
    assert passed, line


if __name__ == "__main__":
    verdicts = []
    for k in sorted(CRITERIA):
        passed, line = evaluate(k)
        verdicts.append(passed)
        print(line, flush=True)
    sys.exit(0 if all(verdicts) else 1)
