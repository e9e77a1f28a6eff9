"""Per-residue block-family verification and the induction pipeline that
certifies the translated-window counting bound for a whole basis.

For one residue a with block families B_1..B_r (each the merged U u S list),
`verify_entry` checks, in this fixed order:

  1. split:        every element is either divisible by a base prime (U side)
                   or lies in T_k (S side); anything else is rejected;
  2. range:        with b = min over all block elements, every U element lies
                   in [b, a] and b is not below the window floor;
  3. disjointness: the U sides are pairwise disjoint across blocks;
  4. block-size:   every |U_i| is k-1 or k;
  5. l-goodness:   U_i u S_i (plus a itself when |U_i| = k-1, in which case
                   a must not already sit in S_i) is l-good under the entry's
                   congruence condition;
  6. coverage:     T_k n [b, a] is contained in the union of the S sides.

A passing verdict certifies the hypotheses under which any adversarial
subset B of [-p_{k+1}+1, a] whose translates by P*l avoid k+1 pairwise
coprime members satisfies |B n [b, a]| <= |F_k n [b, a]|.

`verify_conjecture2` walks every residue of the window upward: the floor is
even and thus in F_k (base case), residues outside T_k are in F_k and chain
through unchanged (skip records), {-1, 1} and {p_{k+1}, p_{k+2}} use the
generated block families, and everything else must be covered by table
entries whose congruence conditions are jointly exhaustive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import PrimeBasis, compute_T_k, in_F_k, window_T_k
from .goodsets import (CongruenceCondition, is_l_good_under,
                       lemma1_entries, lemma2_entries)
from .tables import CaseTable

_CHECK_ORDER = ("split", "range", "disjointness", "block-size", "l-goodness",
                "coverage")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class EntryVerdict:
    a: int
    condition: CongruenceCondition | None
    b: int | None
    blocks: tuple[tuple[int, ...], ...]
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failure(self) -> CheckResult | None:
        for c in self.checks:
            if not c.passed:
                return c
        return None

    def to_json_dict(self) -> dict:
        return {
            "a": self.a,
            "condition": None if self.condition is None else self.condition.to_json_dict(),
            "b": self.b,
            "blocks": [list(b) for b in self.blocks],
            "checks": [
                {"name": c.name, "status": "pass" if c.passed else "fail",
                 "detail": c.detail}
                for c in self.checks
            ],
            "status": "pass" if self.passed else "fail",
        }


def verify_entry(basis: PrimeBasis, a: int, blocks,
                 condition: CongruenceCondition | None = None) -> EntryVerdict:
    """Run the six sub-checks on one residue's block families.

    Failures never raise; each precondition violation becomes a distinct
    failing check so certificates can name it.
    """
    blocks = tuple(tuple(block) for block in blocks)
    checks: list[CheckResult] = []
    t_k = set(compute_T_k(basis))
    win = window_T_k(basis)
    b = None

    def fail(name: str, detail: str) -> EntryVerdict:
        checks.append(CheckResult(name, False, detail))
        return EntryVerdict(a, condition, b, blocks, tuple(checks))

    if a not in t_k:
        return fail("split", f"residue a={a} is not in T_{basis.k}")
    if not blocks:
        return fail("split", "entry has no blocks")
    if condition is not None:
        try:
            condition.validate_for(basis)
        except ValueError as exc:
            return fail("split", str(exc))

    # 1. split into U (hit by a base prime) and S (in T_k)
    u_parts: list[list[int]] = []
    s_parts: list[list[int]] = []
    for bi, block in enumerate(blocks):
        if len(set(block)) != len(block):
            return fail("split", f"block {bi + 1} has repeated elements")
        u, s = [], []
        for m in block:
            if in_F_k(basis, m):
                u.append(m)
            elif m in t_k:
                s.append(m)
            else:
                return fail("split",
                            f"element {m} in block {bi + 1} is neither in F_k "
                            f"nor in T_{basis.k}")
        u_parts.append(u)
        s_parts.append(s)
    checks.append(CheckResult("split", True))

    # 2. window: b is the least element anywhere; U must live in [b, a]
    b = min(m for block in blocks for m in block)
    if b < win.lo:
        return fail("range", f"b={b} lies below the window floor {win.lo}")
    out_of_range = [m for u in u_parts for m in u if m > a]
    if out_of_range:
        return fail("range", f"U element {out_of_range[0]} exceeds a={a}")
    checks.append(CheckResult("range", True, f"b={b}"))

    # 3. U sides pairwise disjoint
    seen: dict[int, int] = {}
    for bi, u in enumerate(u_parts):
        for m in u:
            if m in seen:
                return fail("disjointness",
                            f"element {m} appears in U of blocks "
                            f"{seen[m] + 1} and {bi + 1}")
            seen[m] = bi
    checks.append(CheckResult("disjointness", True))

    # 4. |U_i| in {k-1, k}
    k = basis.k
    for bi, u in enumerate(u_parts):
        if len(u) not in (k - 1, k):
            return fail("block-size",
                        f"block {bi + 1} has |U|={len(u)}, expected {k - 1} or {k}")
    checks.append(CheckResult("block-size",
                              True, f"sizes {tuple(len(u) for u in u_parts)}"))

    # 5. l-goodness (appending a itself for the short blocks)
    for bi, (u, s) in enumerate(zip(u_parts, s_parts)):
        members = u + s
        if len(u) == k - 1:
            if a in s:
                return fail("l-goodness",
                            f"block {bi + 1} has |U|=k-1 but a={a} is in S")
            members = members + [a]
        verdict = is_l_good_under(basis, members, condition)
        if not verdict.ok:
            x, y, q = verdict.failing_pair
            return fail("l-goodness",
                        f"block {bi + 1} pair ({x},{y}) fails at prime {q}")
    checks.append(CheckResult("l-goodness", True))

    # 6. coverage of T_k n [b, a] by the S sides
    covered = set().union(*s_parts) if s_parts else set()
    missing = sorted(t for t in t_k if b <= t <= a and t not in covered)
    if missing:
        return fail("coverage", f"uncovered residues {missing}")
    checks.append(CheckResult("coverage", True,
                              f"covers {sorted(t for t in t_k if b <= t <= a)}"))

    return EntryVerdict(a, condition, b, blocks, tuple(checks))


@dataclass(frozen=True)
class ResidueRecord:
    a: int
    rule: str  # base | lemma1 | lemma2 | lemma3-skip | table
    entries: tuple[EntryVerdict, ...]
    passed: bool
    detail: str = ""

    def to_json_dict(self) -> dict:
        return {
            "a": self.a,
            "rule": self.rule,
            "entries": [e.to_json_dict() for e in self.entries],
            "status": "pass" if self.passed else "fail",
            "detail": self.detail,
        }


@dataclass(frozen=True)
class Conjecture2Certificate:
    k: int
    records: tuple[ResidueRecord, ...]
    notes: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def record_for(self, a: int) -> ResidueRecord:
        win_lo = self.records[0].a
        return self.records[a - win_lo]

    def to_json_dict(self) -> dict:
        return {
            "claim": "conjecture2",
            "k": self.k,
            "status": "pass" if self.passed else "fail",
            "records": [r.to_json_dict() for r in self.records],
            "meta": {
                "valid_for_l": "all l >= 1 (verdicts are l-uniform or split over "
                               "jointly exhaustive congruence classes of l)",
                "notes": list(self.notes),
            },
        }


_NOTES = (
    "residues p_{k+1} and p_{k+2} are discharged by the generated prime-block "
    "construction (lemma2 entries), not by the membership chaining rule",
)


def verify_conjecture2(basis: PrimeBasis, table: CaseTable) -> Conjecture2Certificate:
    """Walk a upward over [-p_{k+1}+1, P_k - p_{k+1}] and certify every
    residue; table gaps and non-exhaustive conditions fail with the residue
    named rather than raising."""
    if table.k != basis.k:
        raise ValueError(f"table k={table.k} does not match basis k={basis.k}")

    win = window_T_k(basis)
    t_k = set(compute_T_k(basis))
    generated = dict(lemma1_entries(basis))
    for a, blocks in lemma2_entries(basis):
        if a in t_k:  # for k <= 2 the lookahead primes fall outside the window
            generated[a] = blocks

    records: list[ResidueRecord] = []
    for a in range(win.lo, win.hi + 1):
        if a == win.lo:
            ok = in_F_k(basis, a)
            records.append(ResidueRecord(
                a, "base", (), ok,
                f"window floor {a} is in F_k" if ok else
                f"window floor {a} is not in F_k"))
        elif a not in t_k:
            ok = in_F_k(basis, a)
            records.append(ResidueRecord(
                a, "lemma3-skip", (), ok,
                "" if ok else f"residue {a} neither in T_k nor in F_k"))
        elif a in (-1, 1):
            verdict = verify_entry(basis, a, generated[a], None)
            records.append(ResidueRecord(a, "lemma1", (verdict,), verdict.passed))
        elif a in (basis.p_k1, basis.p_k2):
            verdict = verify_entry(basis, a, generated[a], None)
            records.append(ResidueRecord(a, "lemma2", (verdict,), verdict.passed))
        else:
            entries = table.entries_for(a)
            if not entries:
                records.append(ResidueRecord(
                    a, "table", (), False, f"no table entry covers a={a}"))
                continue
            conditions = [e.condition for e in entries]
            if any(c is None for c in conditions):
                exhaustive = len(entries) == 1
                why = "" if exhaustive else "conflicting entries for one residue"
            else:
                exhaustive = (
                    len(entries) == 2
                    and conditions[0].prime == conditions[1].prime
                    and conditions[0].anchor == a == conditions[1].anchor
                    and conditions[0].divides != conditions[1].divides
                )
                why = "" if exhaustive else (
                    f"conditions for a={a} are not jointly exhaustive")
            verdicts = tuple(
                verify_entry(basis, a, e.block_lists(), e.condition)
                for e in entries
            )
            ok = exhaustive and all(v.passed for v in verdicts)
            records.append(ResidueRecord(a, "table", verdicts, ok, why))

    return Conjecture2Certificate(k=basis.k, records=tuple(records), notes=_NOTES)


def reverify_entry_json(k: int, entry_obj: dict) -> bool:
    """Re-run verify_entry from a serialized verdict alone; certificates embed
    the blocks, so no table access is needed."""
    from .arith import make_basis

    basis = make_basis(k)
    cond = entry_obj.get("condition")
    verdict = verify_entry(
        basis,
        int(entry_obj["a"]),
        [list(map(int, b)) for b in entry_obj["blocks"]],
        None if cond is None else CongruenceCondition.from_json_dict(cond),
    )
    return verdict.passed
