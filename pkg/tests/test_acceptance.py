"""Acceptance gate: ten scaled checks, one printed pass/fail line each.

Criteria 3-5 record every norm evaluation (value plus certificate) into a
shared list; criterion 10 re-verifies all of those certificates, so the
tests in this file must run in order (pytest's default for a single file).
"""

import random
import time

from schreier.ordinals import OMEGA, from_int, fundamental_seq
from schreier.suites import (
    check_basis_properties,
    check_cb_index,
    check_certificates,
    check_duality,
    check_equivalence_report,
    check_fine_closed_form,
    check_l1_lower_bound,
    check_lemma47,
    check_natural_sum,
    check_norm_oracles,
    check_schreier_closed_form,
)

RECORDER = []


def rng_for(tag):
    return random.Random("acceptance:%s" % tag)


def gate(num, budget_s, fn):
    start = time.monotonic()
    ok, witness = fn()
    elapsed = time.monotonic() - start
    in_budget = elapsed < budget_s
    verdict = "PASS" if (ok and in_budget) else "FAIL"
    line = "CRITERION %2d: %s (%.1fs of %ds budget)" % (num, verdict, elapsed, budget_s)
    if witness and not ok:
        line += " [%s]" % witness
    print(line)
    assert ok, witness
    assert in_budget, "criterion %d exceeded its %ds budget (%.1fs)" % (num, budget_s, elapsed)


def test_criterion_01_closed_form_identities():
    def run():
        ok, w = check_fine_closed_form(kmax=6, bound=12)
        if not ok:
            return (ok, w)
        return check_schreier_closed_form(bound=14)

    gate(1, 10, run)


def test_criterion_02_cb_index():
    gate(2, 10, lambda: check_cb_index(kmax=6))


def test_criterion_03_norm_oracle_agreement():
    gate(3, 300, lambda: check_norm_oracles(rng_for("c3"), cases=500, recorder=RECORDER))


def test_criterion_04_l1_lower_estimate():
    gate(4, 120, lambda: check_l1_lower_bound(rng_for("c4"), cases=200, recorder=RECORDER))


def test_criterion_05_basis_properties():
    gate(5, 120, lambda: check_basis_properties(
        rng_for("c5"), sign_vectors=30, spread_cases=200, recorder=RECORDER))


def test_criterion_06_ordinal_algebra():
    def run():
        for n in range(1, 30):
            if fundamental_seq(OMEGA, n) != from_int(n):
                return (False, "omega[%d] != %d" % (n, n))
        return check_natural_sum(rng_for("c6"), cases=1000)

    gate(6, 10, run)


def test_criterion_07_derivative_inclusion():
    gate(7, 120, lambda: check_lemma47(rng_for("c7"), cases=100, bound=12))


def test_criterion_08_duality():
    gate(8, 120, lambda: check_duality(rng_for("c8"), bound=6, depth=3, pairs=200))


def test_criterion_09_equivalence_report():
    gate(9, 180, lambda: check_equivalence_report(rng_for("c9"), cases=100))


def test_criterion_10_certificate_soundness():
    gate(10, 60, lambda: check_certificates(RECORDER))
