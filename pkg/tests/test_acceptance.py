"""Acceptance criteria, one test each, at the stated tolerances and time limits.

Run under pytest (a summary line per criterion is printed at the end of the
session) or directly with ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import math
import random
import sys
import time

import pytest

from gybraid.braidrep import (BraidWord, RepContext, check_braid_relation,
                              check_far_commutativity, check_gyb, eval_word, operator_order,
                              rho_sigma)
from gybraid.gates import (build_r_decomposed, build_r_direct, comm_identities_check,
                           not_identities_check)
from gybraid.image_group import (braid_gen_symbolic, conjugation_table_check,
                                 enumerate_image, faithfulness_check,
                                 gamma_skl_independence_check, not_group_order,
                                 witness_state, witness_words, symbolic_to_matrix,
                                 witness_distinctness, word_to_symbolic)
from gybraid.qlinalg import max_entry_distance

# frozen by substitution into m^(n(n-1)/2) * n!, cross-checked by BFS
EXPECTED_ORDERS_MATRIX = {(2, 3): 6, (2, 5): 10, (3, 3): 162, (3, 5): 750, (4, 3): 17496}
EXPECTED_ORDERS_SYMBOLIC = {(4, 5): 375000, (5, 3): 7085880}

RESULTS: list[str] = []


class Outcome:
    def __init__(self, limit_s: float):
        self.limit_s = limit_s
        self.failures: list[str] = []
        self.notes: list[str] = []
        self._t0 = time.perf_counter()

    def require(self, ok: bool, label: str) -> None:
        (self.notes if ok else self.failures).append(label)

    def finish(self) -> tuple[bool, str]:
        elapsed = time.perf_counter() - self._t0
        self.require(elapsed < self.limit_s, f"runtime {elapsed:.2f}s < {self.limit_s:g}s")
        if self.failures:
            return False, "; ".join(self.failures) + f" ({len(self.notes)} other checks pass)"
        return True, f"{len(self.notes)} checks, {elapsed:.2f}s"


def criterion_1():
    out = Outcome(1.0)
    for m in (3, 5, 7, 9):
        res = check_gyb(build_r_direct(m), tol=1e-12).residual_max
        out.require(res < 1e-12, f"gYB m={m} residual {res:.1e}")
    return out.finish()


def criterion_2():
    out = Outcome(1.0)
    for m in (3, 5, 7, 9):
        res = max_entry_distance(build_r_decomposed(m), build_r_direct(m))
        out.require(res < 1e-12, f"decomposition m={m} residual {res:.1e}")
    return out.finish()


def criterion_3():
    out = Outcome(30.0)
    for n in range(2, 7):
        for m in (3, 5, 7):
            ctx = RepContext(n, m)
            far = check_far_commutativity(ctx, tol=1e-12)
            braid = check_braid_relation(ctx, tol=1e-12)
            out.require(far.passed, f"far commutativity ({n},{m}) {far.residual_max:.1e}")
            out.require(braid.passed, f"braid relation ({n},{m}) {braid.residual_max:.1e}")
    return out.finish()


def criterion_4():
    out = Outcome(30.0)
    for n in (3, 4, 5):
        for report in (comm_identities_check(n, tol=1e-12), not_identities_check(n, tol=1e-12)):
            out.require(report.passed, f"{report.check_name} n={n} {report.residual_max:.1e}")
    return out.finish()


def criterion_5():
    out = Outcome(10.0)
    for n in (2, 3, 4, 5):
        order = not_group_order(n)
        out.require(order == math.factorial(n), f"|<NOT>| n={n}: {order} vs {math.factorial(n)}")
    for n in (3, 4):
        state = witness_state(n)
        report = witness_distinctness(witness_words(n), state, n)
        pairs = ", ".join(f"{a}={b}" for a, b in report.collisions)
        out.require(report.distinct, f"witness n={n} on |{state}>"
                    + ("" if report.distinct else f" collides: {pairs}"))
    return out.finish()


def criterion_6():
    out = Outcome(240.0)
    for (n, m), expected in EXPECTED_ORDERS_MATRIX.items():
        assert expected == m ** (n * (n - 1) // 2) * math.factorial(n)
        report = enumerate_image(RepContext(n, m), backend="matrix")
        secs = report.elapsed_ms / 1000
        out.require(report.order_found == expected and not report.truncated,
                    f"matrix ({n},{m}) found {report.order_found} vs {expected}")
        out.require(secs < 120, f"matrix ({n},{m}) {secs:.1f}s < 120s")
    for (n, m), expected in EXPECTED_ORDERS_SYMBOLIC.items():
        assert expected == m ** (n * (n - 1) // 2) * math.factorial(n)
        report = enumerate_image(RepContext(n, m), max_elements=10 ** 7, backend="symbolic")
        secs = report.elapsed_ms / 1000
        out.require(report.order_found == expected and not report.truncated,
                    f"symbolic ({n},{m}) found {report.order_found} vs {expected}")
        out.require(secs < 120, f"symbolic ({n},{m}) {secs:.1f}s < 120s")
    return out.finish()


def criterion_7():
    out = Outcome(60.0)
    for n, m in ((3, 3), (4, 3), (4, 5)):
        report = conjugation_table_check(RepContext(n, m), tol=1e-12)
        out.require(report.passed, f"conjugation table ({n},{m}) {report.residual_max:.1e}")
    for n, m, count in ((3, 3, 27), (3, 5, 125)):
        report = gamma_skl_independence_check(RepContext(n, m), tol=1e-12)
        exhaustive = report.notes["exhaustive"] and report.notes["distinct"] == count
        out.require(report.passed and exhaustive,
                    f"independence ({n},{m}) {report.notes['distinct']}/{count}")
    return out.finish()


def criterion_8():
    out = Outcome(120.0)
    rnd = random.Random(8)
    for n, m in ((3, 3), (3, 5), (4, 3)):
        ctx = RepContext(n, m)
        worst = 0.0
        for _ in range(1000):
            w = BraidWord.random(n, rnd.randint(0, 30), rnd)
            worst = max(worst, max_entry_distance(
                symbolic_to_matrix(word_to_symbolic(w, ctx), ctx), eval_word(w, ctx)))
        out.require(worst < 1e-9, f"backends agree ({n},{m}) worst {worst:.1e}")
    for n, m in ((3, 3), (3, 5)):
        report = faithfulness_check(RepContext(n, m))
        out.require(report.passed, f"injective ({n},{m}) {report.notes['distinct']}"
                    f"/{report.notes['elements']}")
    return out.finish()


def criterion_9():
    out = Outcome(10.0)
    for n, m in ((2, 3), (2, 5), (3, 7)):
        ctx = RepContext(n, m)
        for i in range(1, n):
            k = operator_order(rho_sigma(i, ctx))
            sym = braid_gen_symbolic(i, ctx).order()
            out.require(k == 2 * m == sym, f"order sigma_{i} ({n},{m}): {k}, symbolic {sym}")
    return out.finish()


CRITERIA = {
    1: ("gYB equation", criterion_1),
    2: ("R gate decomposition", criterion_2),
    3: ("far commutativity and braid relations", criterion_3),
    4: ("commutation and NOT identity suites", criterion_4),
    5: ("NOT group order and witnesses", criterion_5),
    6: ("image order", criterion_6),
    7: ("image structure", criterion_7),
    8: ("backend equivalence", criterion_8),
    9: ("generator orders", criterion_9),
}


def run_criterion(number: int) -> tuple[bool, str]:
    title, fn = CRITERIA[number]
    ok, detail = fn()
    line = f"criterion {number} [{title}]: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS.append(line)
    print(line)
    return ok, detail


@pytest.mark.acceptance
@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, detail = run_criterion(number)
    assert ok, detail


if __name__ == "__main__":
    outcomes = [run_criterion(k)[0] for k in sorted(CRITERIA)]
    sys.exit(0 if all(outcomes) else 1)
