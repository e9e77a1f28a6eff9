"""Case tables: structured block-family data per residue a, with loading,
validation and (de)serialization.

Tables ship as JSON data files so that externally supplied tables for other
k travel through the identical code path.  A table file looks like

    {"k": 4,
     "entries": [{"a_values": [17, 19, 23, 29, 31],
                  "condition": null,
                  "blocks": [[-7, 5, 9, 8, -1, 11, 13, 17, 23, 29], ...],
                  "provenance": "case 1"}, ...]}

Blocks store the merged U u S element lists; the U/S split is recomputed from
divisibility by the base primes, never transcribed.  `condition` is either
null or {"prime": q, "divides": bool, "anchor": a}; conditioned entries must
come in complementary divides / does-not-divide pairs for the same residue.

Loading enforces structural invariants only.  Whether the blocks actually
prove anything is the verifier's job (see the induction pipeline module).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .arith import PrimeBasis, make_basis, compute_T_k
from .errors import TableValidationError
from .goodsets import CongruenceCondition


@dataclass(frozen=True)
class Block:
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.elements:
            raise ValueError("block must be nonempty")
        if len(set(self.elements)) != len(self.elements):
            raise ValueError(f"block has repeated elements: {self.elements}")


@dataclass(frozen=True)
class CaseEntry:
    a_values: tuple[int, ...]
    condition: CongruenceCondition | None
    blocks: tuple[Block, ...]
    provenance: str

    def covers(self, a: int) -> bool:
        return a in self.a_values

    def block_lists(self) -> list[list[int]]:
        return [list(b.elements) for b in self.blocks]


@dataclass(frozen=True)
class CaseTable:
    k: int
    entries: tuple[CaseEntry, ...]

    def entries_for(self, a: int) -> list[CaseEntry]:
        return [e for e in self.entries if e.covers(a)]

    def covered_residues(self) -> set[int]:
        out: set[int] = set()
        for e in self.entries:
            out.update(e.a_values)
        return out


def validate_table(table: CaseTable, basis: PrimeBasis | None = None) -> None:
    """Structural invariants: residues lie in T_k, conditions are well formed
    and conditioned residues carry a complementary pair."""
    if basis is None:
        basis = make_basis(table.k)
    if basis.k != table.k:
        raise TableValidationError(f"basis k={basis.k} does not match table k={table.k}")
    t_k = set(compute_T_k(basis))

    by_residue: dict[int, list[CaseEntry]] = {}
    for idx, entry in enumerate(table.entries):
        loc = f"entry {idx} ({entry.provenance!r})"
        if not entry.a_values:
            raise TableValidationError("empty a_values", loc)
        if list(entry.a_values) != sorted(set(entry.a_values)):
            raise TableValidationError(
                f"a_values must be ascending and distinct: {entry.a_values}", loc)
        for a in entry.a_values:
            if a not in t_k:
                raise TableValidationError(f"a_value {a} is not in T_{table.k}", loc)
            by_residue.setdefault(a, []).append(entry)
        if not entry.blocks:
            raise TableValidationError("entry has no blocks", loc)
        if entry.condition is not None:
            entry.condition.validate_for(basis)
            if len(entry.a_values) != 1:
                raise TableValidationError(
                    "conditioned entries must target a single residue", loc)
            if entry.condition.anchor != entry.a_values[0]:
                raise TableValidationError(
                    f"condition anchor {entry.condition.anchor} does not match "
                    f"residue {entry.a_values[0]}", loc)

    for a, entries in sorted(by_residue.items()):
        conditioned = [e for e in entries if e.condition is not None]
        if not conditioned:
            if len(entries) > 1:
                raise TableValidationError(
                    f"residue {a} has {len(entries)} unconditioned entries")
            continue
        if len(entries) != len(conditioned):
            raise TableValidationError(
                f"residue {a} mixes conditioned and unconditioned entries")
        if len(conditioned) != 2:
            raise TableValidationError(
                f"residue {a} has {len(conditioned)} conditioned entries; "
                "a complementary pair is required")
        c0, c1 = conditioned[0].condition, conditioned[1].condition
        if not (c0.prime == c1.prime and c0.anchor == c1.anchor
                and c0.divides != c1.divides):
            raise TableValidationError(
                f"conditions for residue {a} are not mutually exclusive and "
                f"jointly exhaustive: {c0.describe()} vs {c1.describe()}")


def table_to_json_dict(table: CaseTable) -> dict:
    return {
        "k": table.k,
        "entries": [
            {
                "a_values": list(e.a_values),
                "condition": None if e.condition is None else e.condition.to_json_dict(),
                "blocks": [list(b.elements) for b in e.blocks],
                "provenance": e.provenance,
            }
            for e in table.entries
        ],
    }


def _as_int(value) -> int:
    # floats (and bools) are rejected: integer fields must be exact
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"expected an integer, got {value!r}")
    return value


def table_from_json_dict(obj: dict) -> CaseTable:
    try:
        k = _as_int(obj["k"])
        entries = []
        for raw in obj["entries"]:
            cond = raw.get("condition")
            if cond is not None:
                cond = CongruenceCondition(
                    prime=_as_int(cond["prime"]),
                    divides=bool(cond["divides"]),
                    anchor=_as_int(cond["anchor"]),
                )
            entries.append(CaseEntry(
                a_values=tuple(_as_int(a) for a in raw["a_values"]),
                condition=cond,
                blocks=tuple(Block(tuple(_as_int(m) for m in b))
                             for b in raw["blocks"]),
                provenance=str(raw.get("provenance", "")),
            ))
    except (KeyError, TypeError, ValueError) as exc:
        raise TableValidationError(f"malformed table object: {exc}") from exc
    return CaseTable(k=k, entries=tuple(entries))


def load_table(path: str | Path) -> CaseTable:
    """Parse and structurally validate a table file."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise TableValidationError(f"not valid JSON: {exc}", str(path)) from exc
    table = table_from_json_dict(obj)
    validate_table(table)
    return table


def save_table(table: CaseTable, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(table_to_json_dict(table), fh, indent=1)
        fh.write("\n")


def builtin_table(k: int) -> CaseTable:
    """The embedded tables; only k = 3 and k = 4 exist."""
    if k not in (3, 4):
        raise ValueError(f"no builtin table for k={k}; supply one via load_table")
    data = resources.files("coprimax.data").joinpath(f"table_k{k}.json").read_text("utf-8")
    table = table_from_json_dict(json.loads(data))
    validate_table(table)
    return table
