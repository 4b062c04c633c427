"""Acceptance run: one PASS/FAIL line per criterion, at q = 2 and q = 3.

Run directly (``python tests/test_acceptance.py``) for the bare listing, or
through pytest, which prints the same lines in the terminal summary.
"""
from __future__ import annotations

import sys
import time
from functools import lru_cache

import pytest

from qloop.suites import SUITE_FUNCS, ideal_literal_suite

QS = (2, 3)

CRITERIA = {
    1: ("presentation", "every constructed module satisfies all defining relations exactly"),
    2: ("drinfeld-oracle", "Drinfeld matrices equal the closed form; phi/h top eigenvalues agree three ways"),
    3: ("theorem1", "class of E(V) is nonzero and E(V) has one highest-l-weight line"),
    4: ("theorem1", "dim Ext1(eval(m,1)) = 1 for m = 1, 2, 3"),
    5: ("theorem1", "dim Ext1(V (x) V) >= 2 for eval(1,1) and eval(2,1)"),
    6: ("weyl", "dim Ext1(W(pi)) = deg pi"),
    7: ("theorem1", "simple tensor: dim Ext1(V1 (x) V2) >= dim Ext1(V1) = 1"),
    8: ("ideal", "A_2m/I has codimension 2, generators vanish at pi(m,1)^2, non-split"),
    9: ("weyl", "single and square relations hold; weyl_quotient_dims(2) = (16, 9)"),
    10: ("theorem1", "simplicity of eval and eval^2; adjacent pair not simple with certificate"),
    11: ("theorem1", "primitive_root and proportional_h recover s for str(1,1)^s"),
    12: ("walkprop", "forcing identity gives the diagonal line"),
}

STRICT_8 = "codimension stays 2 when the r = 2m-1 generator is imposed too"

LINES: list[str] = []


@lru_cache(maxsize=None)
def _suite(name: str, q: int):
    if name == "ideal-literal":
        return tuple(ideal_literal_suite(q))
    return tuple(SUITE_FUNCS[name](q))


def evaluate(criterion: int, q: int) -> tuple[bool, list]:
    suite, _ = CRITERIA[criterion]
    checks = [c for c in _suite(suite, q) if c.criterion == criterion]
    return bool(checks) and all(c.passed for c in checks), checks


def _line(tag: str, q: int, ok: bool, text: str, checks) -> str:
    bad = [f"{c.name}: expected {c.expected}, got {c.computed}" for c in checks if not c.passed]
    detail = f" [{'; '.join(bad[:2])}]" if bad else f" ({len(checks)} checks)"
    return f"{'PASS' if ok else 'FAIL'}  criterion {tag:<9} q={q}  {text}{detail}"


@pytest.mark.parametrize("q", QS, ids=lambda q: f"q={q}")
@pytest.mark.parametrize("criterion", sorted(CRITERIA), ids=lambda c: f"c{c}")
def test_criterion(criterion, q):
    ok, checks = evaluate(criterion, q)
    LINES.append(_line(str(criterion), q, ok, CRITERIA[criterion][1], checks))
    assert ok, [c for c in checks if not c.passed]


@pytest.mark.xfail(strict=True, reason="the listed generator with r = 2m-1 cuts A_2m/I to dimension 1; "
                                       "see the decisions ledger")
@pytest.mark.parametrize("q", QS, ids=lambda q: f"q={q}")
def test_criterion_8_strict(q):
    checks = _suite("ideal-literal", q)
    ok = all(c.passed for c in checks)
    LINES.append(_line("8-strict", q, ok, STRICT_8, checks))
    assert ok


def main() -> int:
    start = time.time()
    failures = 0
    for criterion in sorted(CRITERIA):
        for q in QS:
            ok, checks = evaluate(criterion, q)
            failures += not ok
            print(_line(str(criterion), q, ok, CRITERIA[criterion][1], checks))
    for q in QS:
        checks = _suite("ideal-literal", q)
        print(_line("8-strict", q, all(c.passed for c in checks), STRICT_8, checks))
    print(f"{failures} of {len(CRITERIA) * len(QS)} criterion runs failed; {time.time() - start:.1f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
