"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Run `pytest -s tests/test_acceptance.py` to see the lines as they complete.
Every stated runtime limit is asserted, not just observed.
"""

import json
import random
import time

from coprimax import bruteforce as bf
from coprimax.arith import E_elements, count_E, make_basis
from coprimax.cli import main
from coprimax.conj2 import verify_conjecture2
from coprimax.scanner import scan_H
from coprimax.search import UNIQUENESS, VALUE_ONLY, check_range, exact_f
from coprimax.tables import builtin_table, table_from_json_dict, table_to_json_dict
from coprimax.theorems import (builtin_scheme, remark_counterexample,
                               verify_counting, verify_theorem1,
                               verify_theorem2, verify_uniqueness_chain_k4)


def _report(criterion: int, passed: bool, detail: str) -> None:
    line = f"acceptance {criterion:>2}: {'PASS' if passed else 'FAIL'} - {detail}"
    print(line)
    assert passed, line


def test_criterion_01_oracle_equivalence():
    t0 = time.monotonic()
    mismatches = []
    for n in range(1, 23):
        table = bf.max_clique_table(n)
        for k in (1, 2, 3, 4):
            oracle = bf.bruteforce_f(n, k, table)
            solver = exact_f(n, k).f_value
            if oracle != solver:
                mismatches.append((n, k, oracle, solver))
    elapsed = time.monotonic() - t0
    _report(1, not mismatches and elapsed < 60,
            f"exact_f = exhaustive oracle for n <= 22, k <= 4 "
            f"({elapsed:.1f}s < 60s, mismatches: {mismatches})")


def test_criterion_02_value_sweeps():
    sweeps = [
        (1, 2, 40, lambda basis, n: n // 2),
        (2, 3, 60, count_E),
        (3, 5, 100, count_E),
        (4, 7, 60, count_E),
    ]
    bad, times = [], []
    for k, lo, hi, expected in sweeps:
        t0 = time.monotonic()
        basis = make_basis(k)
        for n in range(lo, hi + 1):
            want = expected(basis, n)
            got = exact_f(n, k).f_value
            if got != want:
                bad.append((n, k, got, want))
        times.append(time.monotonic() - t0)
    _report(2, not bad and all(t < 600 for t in times),
            "f sweeps match |E| (k=1: floor(n/2)) "
            f"[times {', '.join(f'{t:.1f}s' for t in times)} each < 600s, "
            f"mismatches: {bad}]")


def test_criterion_03_counterexample_reproduction():
    o54 = exact_f(54, 3, enumerate_sets=True)
    e54 = tuple(E_elements(make_basis(3), 54))
    a54 = tuple(sorted((set(e54) - {5, 25}) | {7, 49}))
    ok54 = (o54.f_value == 39 and e54 in o54.maximum_sets
            and a54 in o54.maximum_sets
            and all(len(s) == 39 for s in (e54, a54)))

    o48 = exact_f(48, 4, enumerate_sets=True)
    e48 = tuple(E_elements(make_basis(4), 48))
    a48 = tuple(sorted((set(e48) - {7}) | {11}))
    ok48 = (o48.f_value == 36 and e48 in o48.maximum_sets
            and a48 in o48.maximum_sets
            and all(len(s) == 36 for s in (e48, a48)))

    _report(3, ok54 and ok48,
            f"n=54,k=3 enumerates E and (E\\{{5,25}})u{{7,49}} at size 39 "
            f"({len(o54.maximum_sets)} sets); n=48,k=4 enumerates E and "
            f"(E\\{{7}})u{{11}} at size 36 ({len(o48.maximum_sets)} sets)")


def test_criterion_04_threshold_reproduction():
    t0 = time.monotonic()
    k3 = check_range(3, 55, 100, UNIQUENESS)
    at54 = exact_f(54, 3, enumerate_sets=True, cap=2)
    k4 = check_range(4, 49, 60, UNIQUENESS)
    at48 = exact_f(48, 4, enumerate_sets=True, cap=2)
    elapsed = time.monotonic() - t0
    ok = (k3.all_unique and at54.E_is_unique_maximum is False
          and k4.all_unique and at48.E_is_unique_maximum is False
          and elapsed < 1800)
    _report(4, ok,
            f"E unique for k=3 on [55,100] and k=4 on [49,60], non-unique at "
            f"54 and 48 ({elapsed:.1f}s < 1800s)")


def _mutate_once(rng: random.Random, obj: dict) -> dict:
    entries = obj["entries"]
    while True:
        entry = rng.choice(entries)
        block = rng.choice(entry["blocks"])
        pos = rng.randrange(len(block))
        old = block[pos]
        if rng.random() < 0.5:
            new = old + rng.choice((-3, -2, -1, 1, 2, 3))
        else:
            new = rng.randint(-10, 209)
        if new != old and new not in block:
            block[pos] = new
            return {"entry": entry["provenance"], "old": old, "new": new}


def test_criterion_05_conjecture2_certificates_and_mutations(tmp_path):
    certs = {}
    for k in (3, 4):
        out = tmp_path / f"cert{k}.json"
        exit_code = main(["verify", "conjecture2", "--k", str(k),
                          "--format", "json", "--out", str(out)])
        certs[k] = (exit_code, json.loads(out.read_text()))
    code3, cert3 = certs[3]
    code4, cert4 = certs[4]
    r71 = next(r for r in cert4["records"] if r["a"] == 71)
    structural = (code3 == 0 and cert3["status"] == "pass"
                  and len(cert3["records"]) == 30
                  and code4 == 0 and cert4["status"] == "pass"
                  and len(cert4["records"]) == 210
                  and len(r71["entries"]) == 2
                  and {e["condition"]["divides"] for e in r71["entries"]}
                  == {True, False})

    rng = random.Random(20240810)
    undetected = []
    for trial in range(50):
        k = 3 if trial % 2 == 0 else 4
        obj = table_to_json_dict(builtin_table(k))
        info = _mutate_once(rng, obj)
        cert = verify_conjecture2(make_basis(k), table_from_json_dict(obj))
        if cert.passed:
            undetected.append((k, info))
    _report(5, structural and not undetected,
            f"certificates pass with 30 / 210 records, conditioned pair at "
            f"a=71; 50/50 random single-element mutations detected "
            f"(undetected: {undetected})")


def test_criterion_06_counting_and_chain():
    t0 = time.monotonic()
    s3, s4 = builtin_scheme(3), builtin_scheme(4)
    b3, b4 = make_basis(3), make_basis(4)
    ok = (all(verify_counting(s3, n, b3).passed for n in range(55, 84))
          and not verify_counting(s3, 54, b3).passed
          and all(verify_counting(s4, n, b4).passed for n in range(7, 200))
          and all(verify_uniqueness_chain_k4(n).passed for n in range(49, 200)))
    elapsed = time.monotonic() - t0
    _report(6, ok and elapsed < 60,
            f"counting passes k=3 on [55,83] (fails at 54) and k=4 on [7,199]; "
            f"uniqueness chain passes on [49,199] ({elapsed:.1f}s < 60s)")


def test_criterion_07_theorem_assembly():
    t1 = verify_theorem1()
    t2 = verify_theorem2()
    base1 = next(c for c in t1.components if c["component"] == "base-range")
    base2 = next(c for c in t2.components if c["component"] == "base-range")
    spliced1 = (base1["from"], base1["to"]) == (55, 30 * t1.l0 - 7)
    spliced2 = (base2["from"], base2["to"]) == (49, 210 * t2.l0 - 11)
    _report(7, t1.passed and t2.passed and spliced1 and spliced2,
            f"theorem certificates pass; base ranges splice at "
            f"{base1['to']} (k=3, l0={t1.l0}) and {base2['to']} (k=4, l0={t2.l0})")


def test_criterion_08_remark_construction():
    results = {}
    for k in range(1, 7):
        r = remark_counterexample(make_basis(k))  # raises on any failure
        results[k] = (r.n, r.size)
    _report(8, len(results) == 6,
            f"square-threshold counterexamples verified for k=1..6: {results}")


def test_criterion_09_h_scan():
    t0 = time.monotonic()
    hits = [r.t for r in scan_H(2000)]
    elapsed = time.monotonic() - t0
    _report(9, hits == [209, 1823] and elapsed < 5,
            f"scan_H(2000) = {hits} ({elapsed:.2f}s < 5s)")


def _strip_diagnostics(obj):
    if isinstance(obj, dict):
        return {k: _strip_diagnostics(v) for k, v in obj.items()
                if k != "diagnostics"}
    if isinstance(obj, list):
        return [_strip_diagnostics(v) for v in obj]
    return obj


def test_criterion_10_determinism(tmp_path, capsys):
    runs_f, runs_cert = [], []
    for threads in ("1", "4", "8"):
        out_f = tmp_path / f"f_{threads}.json"
        assert main(["f", "--n", "40", "--k", "3", "--enumerate",
                     "--format", "json", "--threads", threads,
                     "--out", str(out_f)]) == 0
        runs_f.append(out_f.read_text())

        out_c = tmp_path / f"cert_{threads}.json"
        assert main(["verify", "conjecture2", "--k", "4", "--format", "json",
                     "--threads", threads, "--out", str(out_c)]) == 0
        runs_cert.append(out_c.read_text())
    capsys.readouterr()

    stripped = [json.dumps(_strip_diagnostics(json.loads(r)), sort_keys=True)
                for r in runs_f]
    ok = (stripped[0] == stripped[1] == stripped[2]
          and runs_cert[0] == runs_cert[1] == runs_cert[2])
    _report(10, ok,
            "JSON artifacts byte-identical across --threads 1/4/8 "
            "(diagnostics field excluded)")
