import json
import math
import random

import pytest

from coprimax.arith import E_elements, make_basis, window_T_k
from coprimax.conj2 import (reverify_entry_json, verify_conjecture2,
                            verify_entry)
from coprimax.goodsets import CongruenceCondition
from coprimax.sets import find_clique_in_elements
from coprimax.tables import builtin_table

B3, B4 = make_basis(3), make_basis(4)
T3, T4 = builtin_table(3), builtin_table(4)


def test_entry_k3_a23():
    verdict = verify_entry(B3, 23, T3.entries_for(23)[0].block_lists())
    assert verdict.passed
    assert verdict.b == -5
    sizes = next(c for c in verdict.checks if c.name == "block-size")
    assert sizes.detail == "sizes (3, 3, 2)"
    coverage = next(c for c in verdict.checks if c.name == "coverage")
    assert coverage.detail == "covers [-1, 1, 7, 11, 13, 17, 19, 23]"


def test_entry_k4_a97():
    verdict = verify_entry(B4, 97, T4.entries_for(97)[0].block_lists())
    assert verdict.passed
    assert verdict.b == 91


def test_entry_k4_a71_conditioned():
    for entry in T4.entries_for(71):
        verdict = verify_entry(B4, 71, entry.block_lists(), entry.condition)
        assert verdict.passed, (entry.condition.describe(), verdict.failure)


def test_entry_detects_coverage_gap():
    blocks = [list(b) for b in T3.entries_for(19)[0].block_lists()]
    blocks[1].remove(19)
    verdict = verify_entry(B3, 19, blocks)
    assert not verdict.passed
    assert verdict.failure.name == "coverage"
    assert "19" in verdict.failure.detail


def test_entry_rejects_residue_outside_T_k():
    verdict = verify_entry(B3, 25, [[2, 3, 5]])
    assert not verdict.passed
    assert verdict.failure.name == "split"


def test_entry_failures_report_earliest_check():
    # break two checks at once: range (via an element below the floor, which
    # shifts b) must be reported before coverage
    blocks = [[8, 9, 5, 7, 11, 13, 17], [4, 3, -5, 1, -1, 19, -30]]
    verdict = verify_entry(B3, 13, blocks)
    assert not verdict.passed
    assert verdict.failure.name == "range"

    order = [c.name for c in verdict.checks]
    assert order == sorted(order, key=["split", "range", "disjointness",
                                       "block-size", "l-goodness",
                                       "coverage"].index)


def test_certificate_k3():
    cert = verify_conjecture2(B3, T3)
    assert cert.passed
    assert len(cert.records) == 30
    assert [r.a for r in cert.records] == list(range(-6, 24))
    rules = {r.a: r.rule for r in cert.records}
    assert rules[-6] == "base"
    assert rules[-1] == rules[1] == "lemma1"
    assert rules[7] == rules[11] == "lemma2"
    assert rules[13] == rules[23] == "table"
    assert rules[0] == rules[20] == "lemma3-skip"


def test_certificate_k4():
    cert = verify_conjecture2(B4, T4)
    assert cert.passed
    assert len(cert.records) == 210
    r71 = cert.record_for(71)
    assert r71.rule == "table" and len(r71.entries) == 2
    conds = {e.condition.divides for e in r71.entries}
    assert conds == {True, False}


def test_certificate_fails_on_dropped_condition_side():
    mutated = type(T4)(
        k=4,
        entries=tuple(e for e in T4.entries
                      if not (e.condition and e.condition.divides)),
    )
    cert = verify_conjecture2(B4, mutated)
    assert not cert.passed
    r71 = cert.record_for(71)
    assert not r71.passed
    assert "exhaustive" in r71.detail


def test_certificate_fails_on_missing_entry():
    mutated = type(T3)(k=3, entries=T3.entries[:1])  # drop the a=23 case
    cert = verify_conjecture2(B3, mutated)
    assert not cert.passed
    r23 = cert.record_for(23)
    assert "no table entry covers a=23" in r23.detail


def test_certificate_small_k_needs_no_table():
    from coprimax.tables import CaseTable
    for k in (1, 2):
        basis = make_basis(k)
        cert = verify_conjecture2(basis, CaseTable(k=k, entries=()))
        assert cert.passed
        assert len(cert.records) == basis.primorial


def test_certificate_json_schema():
    cert = verify_conjecture2(B3, T3)
    obj = cert.to_json_dict()
    assert obj["claim"] == "conjecture2" and obj["k"] == 3
    assert obj["status"] == "pass"
    assert len(obj["records"]) == 30
    record = obj["records"][-1]
    assert set(record) >= {"a", "rule", "entries"}
    json.dumps(obj)  # serializable


def test_records_reverify_from_serialized_form():
    for k, table in ((3, T3), (4, T4)):
        cert = verify_conjecture2(make_basis(k), table)
        for record in cert.to_json_dict()["records"]:
            for entry in record["entries"]:
                assert reverify_entry_json(k, entry)


def _greedy_adversary(rng, basis, a, l):
    """Largest-first greedy B over [-p_{k+1}+1, a] whose translates stay
    clique-free; order shuffled for variety."""
    window = list(range(window_T_k(basis).lo, a + 1))
    rng.shuffle(window)
    chosen: list[int] = []
    for b in window:
        translates = [basis.primorial * l + c for c in chosen + [b]]
        if find_clique_in_elements(translates, basis.k + 1) is None:
            chosen.append(b)
    return chosen


def test_counting_bound_soundness_sampled():
    # the operational meaning of a passing certificate: no adversarial B
    # beats |F_k| on any prefix window
    rng = random.Random(42)
    assert verify_conjecture2(B3, T3).passed
    floor = window_T_k(B3).lo
    for _ in range(500):
        a = rng.choice([a for a in range(-5, 24)])
        l = rng.randint(1, 50)
        adversary = _greedy_adversary(rng, B3, a, l)
        f_count = sum(1 for m in range(floor, a + 1)
                      if m == 0 or math.gcd(m, 30) > 1)
        assert len(adversary) <= f_count, (a, l, sorted(adversary))
