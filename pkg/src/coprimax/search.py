"""Exact f(n, k) and enumeration of all maximum admissible sets.

Whether a subset of [1, n] contains k+1 pairwise coprime members depends only
on which prime supports occur in it: two integers are coprime iff their
supports are disjoint, and integers sharing a support are interchangeable.
Every maximum admissible set is therefore a union of whole support groups
(otherwise completing a partial group would grow it), so the search runs over
groups: pick a family of supports with no k+1 pairwise disjoint members,
maximizing the total group weight.

Branch and bound over the groups, residual supports first (those hitting no
base prime; they are the only ones that can complete a (k+1)-clique with the
pigeonholed F_k side), each side in descending weight order.  The ordering is
static rather than adaptive: determinism and reproducible enumeration order
matter more here than the last factor of node count.

State kept incrementally along the DFS:

  * chosen:   bitmap over group indices;
  * alive:    undecided groups still addable, i.e. groups g such that the
              chosen family holds no k pairwise disjoint members all disjoint
              from g.  Taking a group can only shrink other groups' options,
              so alive only ever loses bits along a branch.

The pruning bound is: current weight  +  total weight of alive F_k groups  +
a clique-cover bound over alive residual groups (residuals are partitioned
into pairwise-disjoint cliques up front; any admissible family takes at most
k members of one clique, so each clique contributes its k heaviest alive
weights).  The incumbent starts at |E(n, k)|, which is admissible by
pigeonhole, so value mode only ever has to refute strictly better families.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .arith import PrimeBasis, Window, make_basis, first_primes
from .sets import CandidateSet

DEFAULT_NODE_BUDGET = 10 ** 9
DEFAULT_TIME_BUDGET_MS = 300_000
DEFAULT_ENUMERATION_CAP = 10_000

COMPLETE = "complete"
BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SearchOutcome:
    n: int
    k: int
    f_value: int
    status: str  # complete | budget_exceeded
    matches_E: bool
    maximum_sets: tuple[tuple[int, ...], ...] | None  # None when not enumerated
    truncated: bool
    E_is_unique_maximum: bool | None  # None = unknown (not enumerated/truncated)
    lower_bound: int
    upper_bound: int
    nodes_explored: int
    elapsed_ms: float

    def maximum_candidate_sets(self) -> list[CandidateSet]:
        window = Window(1, self.n)
        return [CandidateSet.from_elements(s, window) for s in self.maximum_sets or ()]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "f": self.f_value,
            "status": self.status,
            "matches_E": self.matches_E,
            "maximum_sets": None if self.maximum_sets is None
                            else [list(s) for s in self.maximum_sets],
            "truncated": self.truncated,
            "E_is_unique_maximum": self.E_is_unique_maximum,
            "bounds": {"lower": self.lower_bound, "upper": self.upper_bound},
            "diagnostics": {"nodes": self.nodes_explored,
                            "elapsed_ms": round(self.elapsed_ms, 3)},
        }


def _support_groups(n: int, k: int):
    """Support groups of [1, n] in branching order.

    Returns (masks, weights, elements, n_residual, base_mask): residual
    groups occupy indices [0, n_residual), each side sorted by descending
    weight then ascending least element.
    """
    primes = []
    spf = list(range(n + 1))
    for p in range(2, n + 1):
        if spf[p] == p:
            primes.append(p)
            for q in range(p * p, n + 1, p):
                if spf[q] == q:
                    spf[q] = p
    index = {p: i for i, p in enumerate(primes)}

    base_mask = 0
    for p in first_primes(k):
        if p <= n:
            base_mask |= 1 << index[p]

    groups: dict[int, list[int]] = {}
    for m in range(1, n + 1):
        mask, x = 0, m
        while x > 1:
            p = spf[x]
            mask |= 1 << index[p]
            while x % p == 0:
                x //= p
        groups.setdefault(mask, []).append(m)

    def order_key(item):
        mask, elems = item
        return (-len(elems), elems[0])

    residual = sorted((g for g in groups.items() if g[0] & base_mask == 0), key=order_key)
    f_side = sorted((g for g in groups.items() if g[0] & base_mask != 0), key=order_key)
    ordered = residual + f_side
    masks = [g[0] for g in ordered]
    weights = [len(g[1]) for g in ordered]
    elements = [g[1] for g in ordered]
    return masks, weights, elements, len(residual), base_mask


class _GroupSolver:
    def __init__(self, n: int, k: int, budget_nodes: int, budget_ms: float):
        self.n, self.k = n, k
        masks, weights, elements, n_res, _ = _support_groups(n, k)
        self.masks = masks
        self.weights = weights
        self.elements = elements
        self.n_res = n_res
        self.m = len(masks)
        self.budget_nodes = budget_nodes
        self.budget_ms = budget_ms

        # pairwise disjointness bitmaps over group indices
        self.disj = [0] * self.m
        for i in range(self.m):
            bm = 0
            for j in range(self.m):
                if i != j and masks[i] & masks[j] == 0:
                    bm |= 1 << j
            self.disj[i] = bm

        # greedy partition of residual groups into pairwise-disjoint cliques
        self.cover: list[list[int]] = []
        for i in range(n_res):
            for clique in self.cover:
                if all(masks[i] & masks[j] == 0 for j in clique):
                    clique.append(i)
                    break
            else:
                self.cover.append([i])

        self.e_weight = sum(weights[n_res:])
        self.nodes = 0
        self.aborted = False
        self.abort_upper = 0
        self.t0 = time.monotonic()

    # -- feasibility ------------------------------------------------------

    def _has_disjoint(self, candidates: int, need: int) -> bool:
        """True iff `candidates` (bitmap of chosen groups) contains `need`
        pairwise disjoint members."""
        if need == 0:
            return True
        if candidates.bit_count() < need:
            return False
        while candidates:
            low = candidates & -candidates
            i = low.bit_length() - 1
            if self._has_disjoint(candidates & self.disj[i], need - 1):
                return True
            candidates ^= low
        return False

    def _filter_alive(self, alive: int, chosen: int, g: int) -> int:
        """Drop alive groups that taking g just made infeasible: any new
        forbidding clique must contain g itself."""
        scan = alive & self.disj[g]
        dg = self.disj[g]
        k1 = self.k - 1
        while scan:
            low = scan & -scan
            h = low.bit_length() - 1
            if self._has_disjoint(chosen & self.disj[h] & dg, k1):
                alive ^= low
            scan ^= low
        return alive

    # -- bound ------------------------------------------------------------

    def _cover_bound(self, alive_res: int) -> int:
        if not alive_res:
            return 0
        total = 0
        for clique in self.cover:
            ws = sorted((self.weights[i] for i in clique
                         if (alive_res >> i) & 1), reverse=True)
            total += sum(ws[: self.k])
        return total

    # -- search -----------------------------------------------------------

    def run(self, *, mode: str, target: int = 0, cap: int = 0):
        """mode 'value': maximize, pruning bound <= best (incumbent |E|).
        mode 'enumerate': record every family of weight exactly `target`,
        pruning bound < target, stopping at `cap` solutions."""
        self.mode = mode
        self.best = self.e_weight
        self.target = target
        self.cap = cap
        self.solutions: list[tuple[int, ...]] = []
        self.truncated = False
        res_mask = (1 << self.n_res) - 1
        alive = (1 << self.m) - 1
        alive_f_weight = sum(self.weights[self.n_res:])
        self._dfs(0, 0, 0, alive, alive_f_weight, res_mask)
        return self

    def _budget_ok(self) -> bool:
        if self.aborted:
            return False
        self.nodes += 1
        if self.nodes > self.budget_nodes:
            self.aborted = True
            return False
        if self.nodes % 4096 == 0:
            if (time.monotonic() - self.t0) * 1000.0 > self.budget_ms:
                self.aborted = True
                return False
        return True

    def _record(self, chosen: int) -> None:
        elems: list[int] = []
        scan = chosen
        while scan:
            low = scan & -scan
            elems.extend(self.elements[low.bit_length() - 1])
            scan ^= low
        self.solutions.append(tuple(sorted(elems)))
        if len(self.solutions) >= self.cap:
            self.truncated = True
            self.aborted = True

    def _dfs(self, idx: int, chosen: int, weight: int, alive: int,
             alive_f_weight: int, res_mask: int) -> None:
        if not self._budget_ok():
            self.abort_upper = max(
                self.abort_upper,
                weight + alive_f_weight + self._cover_bound(alive & res_mask))
            return
        if idx == self.m:
            if self.mode == "value":
                if weight > self.best:
                    self.best = weight
            elif weight == self.target:
                self._record(chosen)
            return

        bound = weight + alive_f_weight + self._cover_bound(alive & res_mask)
        if self.mode == "value":
            if bound <= self.best:
                return
        elif bound < self.target:
            return

        bit = 1 << idx
        is_res = idx < self.n_res
        w = self.weights[idx] if alive & bit else 0

        if alive & bit:
            new_alive = self._filter_alive(alive & ~bit, chosen | bit, idx)
            lost_f = 0
            lost = (alive & ~bit) & ~new_alive
            scan = lost & ~res_mask
            while scan:
                low = scan & -scan
                lost_f += self.weights[low.bit_length() - 1]
                scan ^= low
            self._dfs(idx + 1, chosen | bit, weight + self.weights[idx],
                      new_alive,
                      alive_f_weight - (0 if is_res else w) - lost_f,
                      res_mask)

        self._dfs(idx + 1, chosen, weight, alive & ~bit,
                  alive_f_weight - (0 if is_res else w), res_mask)


def exact_f(n: int, k: int, *,
            enumerate_sets: bool = False,
            cap: int = DEFAULT_ENUMERATION_CAP,
            budget_nodes: int = DEFAULT_NODE_BUDGET,
            budget_ms: float = DEFAULT_TIME_BUDGET_MS) -> SearchOutcome:
    """Exact f(n, k) by branch and bound; optionally every maximum set.

    The enumeration is canonical: maximum sets are reported in ascending
    lexicographic order of their element lists.  A blown budget yields an
    explicit budget_exceeded outcome carrying the proven bounds, never a
    silently wrong value.
    """
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    t0 = time.monotonic()

    solver = _GroupSolver(n, k, budget_nodes, budget_ms)
    solver.run(mode="value")
    nodes = solver.nodes
    e_weight = solver.e_weight

    if solver.aborted:
        elapsed = (time.monotonic() - t0) * 1000.0
        return SearchOutcome(
            n=n, k=k, f_value=solver.best, status=BUDGET_EXCEEDED,
            matches_E=solver.best == e_weight, maximum_sets=None,
            truncated=False, E_is_unique_maximum=None,
            lower_bound=solver.best,
            upper_bound=max(solver.best, solver.abort_upper),
            nodes_explored=nodes, elapsed_ms=elapsed)

    f_value = solver.best
    maximum_sets = None
    truncated = False
    unique: bool | None = None

    if enumerate_sets:
        # the node/time budget covers both phases of one n
        spent_ms = (time.monotonic() - t0) * 1000.0
        enum = _GroupSolver(n, k, max(budget_nodes - nodes, 1),
                            max(budget_ms - spent_ms, 1.0))
        enum.run(mode="enumerate", target=f_value, cap=cap)
        nodes += enum.nodes
        if enum.aborted and not enum.truncated:
            elapsed = (time.monotonic() - t0) * 1000.0
            return SearchOutcome(
                n=n, k=k, f_value=f_value, status=BUDGET_EXCEEDED,
                matches_E=f_value == e_weight,
                maximum_sets=tuple(sorted(enum.solutions)), truncated=True,
                E_is_unique_maximum=None, lower_bound=f_value,
                upper_bound=f_value, nodes_explored=nodes,
                elapsed_ms=elapsed)
        maximum_sets = tuple(sorted(enum.solutions))
        truncated = enum.truncated
        e_set = tuple(sorted(m for elems in enum.elements[enum.n_res:] for m in elems))
        if len(maximum_sets) >= 2:
            unique = False
        elif not truncated:
            unique = maximum_sets == (e_set,)

    elapsed = (time.monotonic() - t0) * 1000.0
    return SearchOutcome(
        n=n, k=k, f_value=f_value, status=COMPLETE,
        matches_E=f_value == e_weight, maximum_sets=maximum_sets,
        truncated=truncated, E_is_unique_maximum=unique,
        lower_bound=f_value, upper_bound=f_value,
        nodes_explored=nodes, elapsed_ms=elapsed)


VALUE_ONLY = "value_only"
UNIQUENESS = "uniqueness"


@dataclass(frozen=True)
class RangeReport:
    k: int
    n_lo: int
    n_hi: int
    mode: str
    outcomes: tuple[SearchOutcome, ...]

    @property
    def all_match_E(self) -> bool:
        return all(o.matches_E for o in self.outcomes)

    @property
    def all_unique(self) -> bool:
        return all(o.E_is_unique_maximum is True for o in self.outcomes)

    @property
    def all_complete(self) -> bool:
        return all(o.status == COMPLETE for o in self.outcomes)

    def to_json_dict(self) -> dict:
        return {
            "k": self.k, "from": self.n_lo, "to": self.n_hi, "mode": self.mode,
            "all_match_E": self.all_match_E,
            "all_unique": self.all_unique if self.mode == UNIQUENESS else None,
            "outcomes": [o.to_json_dict() for o in self.outcomes],
        }


def check_range(k: int, n_lo: int, n_hi: int, mode: str = VALUE_ONLY, *,
                budget_nodes: int = DEFAULT_NODE_BUDGET,
                budget_ms: float = DEFAULT_TIME_BUDGET_MS) -> RangeReport:
    """Run exact_f over [n_lo, n_hi].  In uniqueness mode the enumeration is
    capped at two sets: one extra maximum set already settles the question."""
    if mode not in (VALUE_ONLY, UNIQUENESS):
        raise ValueError(f"mode must be {VALUE_ONLY} or {UNIQUENESS}, got {mode!r}")
    if n_lo > n_hi:
        raise ValueError(f"empty range [{n_lo}, {n_hi}]")
    outcomes = []
    for n in range(n_lo, n_hi + 1):
        outcomes.append(exact_f(
            n, k, enumerate_sets=(mode == UNIQUENESS), cap=2,
            budget_nodes=budget_nodes, budget_ms=budget_ms))
    return RangeReport(k=k, n_lo=n_lo, n_hi=n_hi, mode=mode,
                       outcomes=tuple(outcomes))
