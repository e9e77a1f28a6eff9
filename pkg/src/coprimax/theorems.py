"""Finite-range counting arguments, the scripted k=4 uniqueness chain, the
square-threshold counterexample construction, and theorem assembly.

The counting argument partitions [1, n] into a handful of pairwise-coprime
classes plus a residual chunk of F_k.  An admissible set meets a pairwise
coprime class in at most k members, so with Y the class elements that lie in
F_k,

    |A| <= sum_i min(|C_i n [1,n]|, k) + (|E(n,k)| - |Y n [1,n]|),

and whenever the class contributions sum to at most |Y n [1,n]| this forces
|A| <= |E(n,k)|.  The verifier checks coverage, pairwise coprimality and the
contribution inequality, and reports the slack.

The uniqueness chain re-checks the five mechanical facts behind the k=4
threshold argument; the logical glue (why s1-s5 imply A(n,4) = E(n,4)) is
recorded as metadata in the certificate, not re-derived.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import (PrimeBasis, count_E, E_elements, in_F_k, is_prime,
                    make_basis, Window)
from .errors import InternalConsistencyError
from .sets import CandidateSet, is_admissible, is_pairwise_coprime

PRIMES_AND_ONE = "primes-and-one"
EXPLICIT = "explicit"


@dataclass(frozen=True)
class PartitionClass:
    kind: str  # primes-and-one | explicit
    elements: tuple[int, ...] = ()

    def members_upto(self, n: int) -> list[int]:
        if self.kind == PRIMES_AND_ONE:
            return [1] + [p for p in range(2, n + 1) if is_prime(p)]
        return [m for m in self.elements if m <= n]


@dataclass(frozen=True)
class PartitionScheme:
    k: int
    classes: tuple[PartitionClass, ...]

    def __post_init__(self) -> None:
        if sum(1 for c in self.classes if c.kind == PRIMES_AND_ONE) > 1:
            raise ValueError("at most one primes-and-one class is allowed")

    def excluded_upto(self, basis: PrimeBasis, n: int) -> set[int]:
        """Y n [1, n]: class members that lie in F_k."""
        out: set[int] = set()
        for cls in self.classes:
            out.update(m for m in cls.members_upto(n) if in_F_k(basis, m))
        return out


def builtin_scheme(k: int) -> PartitionScheme:
    """The embedded partition schemes; only k = 3 and k = 4 exist.

    For k = 4 the derived excluded set is audited against its known 20-element
    transcription at construction time.
    """
    if k == 3:
        return PartitionScheme(3, (
            PartitionClass(PRIMES_AND_ONE),
            PartitionClass(EXPLICIT, (4, 9, 25, 77)),
            PartitionClass(EXPLICIT, (8, 27, 55, 49)),
        ))
    if k == 4:
        scheme = PartitionScheme(4, (
            PartitionClass(PRIMES_AND_ONE),
            PartitionClass(EXPLICIT, (121, 49, 25, 9, 4)),
            PartitionClass(EXPLICIT, (143, 133, 115, 51, 32)),
            PartitionClass(EXPLICIT, (187, 91, 125, 27, 8)),
            PartitionClass(EXPLICIT, (169, 77, 85, 81, 16)),
        ))
        derived = scheme.excluded_upto(make_basis(4), 199)
        expected = {2, 3, 5, 7, 49, 25, 9, 4, 133, 115, 51, 32, 91, 125, 27, 8,
                    77, 85, 81, 16}
        if derived != expected:
            raise InternalConsistencyError(
                f"k=4 excluded-set transcription mismatch: {sorted(derived)}")
        return scheme
    raise ValueError(f"no builtin partition scheme for k={k}")


@dataclass(frozen=True)
class CountingReport:
    k: int
    n: int
    passed: bool
    coverage_ok: bool
    coprime_ok: bool
    contributions: tuple[int, ...]
    y_count: int
    slack: int
    e_size: int
    detail: str = ""

    def to_json_dict(self) -> dict:
        return {
            "claim": "counting",
            "k": self.k,
            "n": self.n,
            "status": "pass" if self.passed else "fail",
            "coverage_ok": self.coverage_ok,
            "coprime_ok": self.coprime_ok,
            "class_contributions": list(self.contributions),
            "excluded_count": self.y_count,
            "slack": self.slack,
            "e_size": self.e_size,
            "detail": self.detail,
        }


def verify_counting(scheme: PartitionScheme, n: int,
                    basis: PrimeBasis | None = None) -> CountingReport:
    """Check the three counting facts at n; a pass certifies f(n,k) = |E(n,k)|."""
    if basis is None:
        basis = make_basis(scheme.k)
    k = scheme.k

    member_lists = [cls.members_upto(n) for cls in scheme.classes]

    in_classes = set().union(*member_lists) if member_lists else set()
    uncovered = [m for m in range(1, n + 1)
                 if m not in in_classes and not in_F_k(basis, m)]
    coverage_ok = not uncovered

    bad_class = next((i for i, ms in enumerate(member_lists)
                      if not is_pairwise_coprime(ms)), None)
    coprime_ok = bad_class is None

    contributions = tuple(min(len(ms), k) for ms in member_lists)
    y_count = len(scheme.excluded_upto(basis, n))
    slack = y_count - sum(contributions)

    passed = coverage_ok and coprime_ok and slack >= 0
    detail = ""
    if uncovered:
        detail = f"elements outside classes and F_k: {uncovered[:5]}"
    elif not coprime_ok:
        detail = f"class {bad_class + 1} is not pairwise coprime within [1,{n}]"
    elif slack < 0:
        detail = (f"class contributions {sum(contributions)} exceed "
                  f"excluded count {y_count}")
    return CountingReport(k=k, n=n, passed=passed, coverage_ok=coverage_ok,
                          coprime_ok=coprime_ok, contributions=contributions,
                          y_count=y_count, slack=slack,
                          e_size=count_E(basis, n), detail=detail)


# -- k = 4 uniqueness chain -------------------------------------------------

_W2 = (121, 49, 25, 9, 4)
_ELEVEN_MULTIPLES = (11, 121, 143, 187)
_CHAIN_RANGE = (49, 199)


@dataclass(frozen=True)
class ChainStep:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ChainReport:
    n: int
    steps: tuple[ChainStep, ...]

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.steps)

    def to_json_dict(self) -> dict:
        return {
            "claim": "uniqueness-chain-k4",
            "n": self.n,
            "status": "pass" if self.passed else "fail",
            "steps": [{"name": s.name,
                       "status": "pass" if s.passed else "fail",
                       "detail": s.detail} for s in self.steps],
            "meta": {
                "conclusion": "any admissible A in [1,n] with |A| >= |E(n,4)| "
                              "equals E(n,4)",
                "glue": "zero slack forces |A n W_1| = |A n W_2| = 4; s2-s3 "
                        "confine A to F_4 plus the four 11-multiples; s4-s5 "
                        "price any of those four above the forced losses",
            },
        }


def verify_uniqueness_chain_k4(n: int, *, force: bool = False) -> ChainReport:
    """Re-check the mechanical facts (s1)-(s5) behind the k=4 threshold.

    `force` skips the range guard so tests can watch the chain break below
    the threshold.
    """
    lo, hi = _CHAIN_RANGE
    if not force and not lo <= n <= hi:
        raise ValueError(f"uniqueness chain is defined for {lo} <= n <= {hi}, got {n}")
    basis = make_basis(4)
    steps: list[ChainStep] = []

    counting = verify_counting(builtin_scheme(4), n, basis)
    s1 = counting.passed and counting.slack == 0
    steps.append(ChainStep("s1-zero-slack", s1,
                           f"counting slack {counting.slack}"))

    bad = [m for m in range(1, n + 1)
           if math.gcd(m, 2310) == 1 and any(math.gcd(m, w) != 1 for w in _W2)]
    steps.append(ChainStep(
        "s2-coprime-to-squares", not bad,
        "every m coprime to 2310 is coprime to all five squares" if not bad
        else f"counterexamples {bad[:5]}"))

    leak = sorted(m for m in range(1, n + 1)
                  if math.gcd(m, 210) == 1 and math.gcd(m, 2310) > 1)
    want = [m for m in _ELEVEN_MULTIPLES if m <= n]
    steps.append(ChainStep(
        "s3-eleven-multiples", leak == want,
        f"residue leak set {leak}"))

    s4_ok, s4_detail = True, "all replacement five-sets pairwise coprime"
    for p in (2, 3, 5, 7):
        others = [q for q in (2, 3, 5, 7, 11) if q != p]
        for y in (p * p, 13 * p, 17 * p, 19 * p):
            five = others + [y]
            if len(set(five)) != 5 or not is_pairwise_coprime(five):
                s4_ok, s4_detail = False, f"p={p}, y={y} is not a coprime five-set"
    steps.append(ChainStep("s4-replacement-cliques", s4_ok, s4_detail))

    lhs = len([m for m in _ELEVEN_MULTIPLES if m <= n])
    s5_ok, ledger = True, []
    for p in (2, 3, 5, 7):
        rhs = len([m for m in (p, p * p, 13 * p, 17 * p, 19 * p) if m <= n])
        ledger.append(f"p={p}: {lhs} < {rhs}")
        if not lhs < rhs:
            s5_ok = False
    steps.append(ChainStep("s5-strict-inequality", s5_ok, "; ".join(ledger)))

    return ChainReport(n=n, steps=tuple(steps))


# -- square-threshold counterexample ----------------------------------------

@dataclass(frozen=True)
class RemarkResult:
    k: int
    n: int
    candidate: CandidateSet
    size: int
    e_size: int

    def to_json_dict(self) -> dict:
        return {
            "claim": "remark",
            "k": self.k,
            "n": self.n,
            "status": "pass",
            "set": self.candidate.members(),
            "size": self.size,
            "e_size": self.e_size,
        }


def remark_counterexample(basis: PrimeBasis) -> RemarkResult:
    """The set (E(n,k) u {p_{k+1}}) minus {p_k} at n = p_k**2 - 1: as large as
    E(n,k), admissible, and different from it.  Every claim is re-verified;
    a failure here means an arithmetic bug, so it raises."""
    k = basis.k
    p_k = basis.base_primes[-1]
    n = p_k * p_k - 1
    window = Window(1, n)
    members = sorted((set(E_elements(basis, n)) - {p_k}) | {basis.p_k1})
    candidate = CandidateSet.from_elements(members, window)

    verdict = is_admissible(candidate, k)
    if not verdict.admissible:
        raise InternalConsistencyError(
            f"remark construction for k={k} admitted a clique "
            f"{verdict.witness.elements}")
    e_size = count_E(basis, n)
    if len(candidate) != e_size:
        raise InternalConsistencyError(
            f"remark construction for k={k} has size {len(candidate)} != {e_size}")
    if set(members) == set(E_elements(basis, n)):
        raise InternalConsistencyError(
            f"remark construction for k={k} collapsed to E itself")
    return RemarkResult(k=k, n=n, candidate=candidate, size=len(candidate),
                        e_size=e_size)


# -- theorem assembly ---------------------------------------------------------

@dataclass(frozen=True)
class BaseEvidence:
    """Uniqueness-grade evidence for one n of the base range."""

    n: int
    grade: str  # value | uniqueness
    passed: bool
    source: str

    def to_json_dict(self) -> dict:
        return {"n": self.n, "grade": self.grade,
                "status": "pass" if self.passed else "fail",
                "source": self.source}


@dataclass(frozen=True)
class TheoremCertificate:
    claim: str
    k: int
    n0: int
    l0: int
    passed: bool
    components: tuple[dict, ...]
    detail: str = ""

    def to_json_dict(self) -> dict:
        return {
            "claim": self.claim,
            "k": self.k,
            "n0": self.n0,
            "l0": self.l0,
            "status": "pass" if self.passed else "fail",
            "components": list(self.components),
            "detail": self.detail,
        }


THEOREM1_N0, THEOREM1_L0 = 55, 3
THEOREM2_N0, THEOREM2_L0 = 49, 1


def assemble_theorem(claim: str, k: int, n0: int, l0: int, conj2_cert,
                     base_evidence: list[BaseEvidence],
                     extra_components: tuple[dict, ...] = ()) -> TheoremCertificate:
    """Splice a passing window certificate with uniqueness-grade base-range
    evidence into a full-range theorem certificate.

    The induction consumes the window certificate for every l >= l0 and the
    base range must reach exactly P_k * l0 - p_{k+1}, with no gap and with
    P_k * l0 - p_{k+1} >= n0 so the downward reference stays inside the base.
    """
    basis = make_basis(k)
    top = basis.primorial * l0 - basis.p_k1
    components: list[dict] = [
        {"component": "conjecture2", "k": k,
         "status": "pass" if conj2_cert.passed else "fail"},
        {"component": "base-range", "from": n0, "to": top,
         "evidence": [e.to_json_dict() for e in base_evidence]},
    ]
    components.extend(extra_components)

    detail = ""
    ok = True
    if conj2_cert.k != k:
        ok, detail = False, f"window certificate is for k={conj2_cert.k}, not {k}"
    elif not conj2_cert.passed:
        ok, detail = False, "window certificate failed"
    elif top < n0:
        ok, detail = False, (f"base-range top P_k*l0 - p_(k+1) = {top} lies "
                             f"below n0 = {n0}; the splice has a gap")
    else:
        by_n = {e.n: e for e in base_evidence}
        for n in range(n0, top + 1):
            ev = by_n.get(n)
            if ev is None:
                ok, detail = False, f"base range has no evidence for n={n}"
                break
            if ev.grade != "uniqueness":
                ok, detail = False, (f"evidence for n={n} is only "
                                     f"{ev.grade}-grade")
                break
            if not ev.passed:
                ok, detail = False, f"evidence for n={n} failed"
                break

    return TheoremCertificate(claim=claim, k=k, n0=n0, l0=l0, passed=ok,
                              components=tuple(components), detail=detail)


def verify_theorem1(*, budget_nodes: int | None = None,
                    budget_ms: float | None = None) -> TheoremCertificate:
    """The k=3 threshold: window certificate plus uniqueness search over the
    base range 55..83 = P_3 * 3 - 7."""
    from .conj2 import verify_conjecture2
    from .search import UNIQUENESS, check_range
    from .tables import builtin_table

    basis = make_basis(3)
    cert = verify_conjecture2(basis, builtin_table(3))
    kw = _budget_kwargs(budget_nodes, budget_ms)
    top = basis.primorial * THEOREM1_L0 - basis.p_k1
    base = check_range(3, THEOREM1_N0, top, UNIQUENESS, **kw)
    evidence = [
        BaseEvidence(n=o.n, grade="uniqueness",
                     passed=o.status == "complete"
                     and o.E_is_unique_maximum is True,
                     source="exhaustive search")
        for o in base.outcomes
    ]
    return assemble_theorem("theorem1", 3, THEOREM1_N0, THEOREM1_L0, cert,
                            evidence)


def verify_theorem2(*, budget_nodes: int | None = None,
                    budget_ms: float | None = None) -> TheoremCertificate:
    """The k=4 threshold: window certificate, counting over 7..199, the
    uniqueness chain over 49..199, and a search cross-check on 7..60.

    A disagreement between the counting/chain verdicts and the search is an
    arithmetic bug, not a failed claim, and raises accordingly.
    """
    from .conj2 import verify_conjecture2
    from .search import UNIQUENESS, VALUE_ONLY, check_range
    from .tables import builtin_table

    basis = make_basis(4)
    scheme = builtin_scheme(4)
    cert = verify_conjecture2(basis, builtin_table(4))
    kw = _budget_kwargs(budget_nodes, budget_ms)

    counting = [verify_counting(scheme, n, basis) for n in range(7, 200)]
    counting_ok = all(r.passed for r in counting)
    chain = [verify_uniqueness_chain_k4(n) for n in range(49, 200)]

    values = check_range(4, 7, 48, VALUE_ONLY, **kw)
    uniq = check_range(4, 49, 60, UNIQUENESS, **kw)
    for outcome in values.outcomes:
        if outcome.status == "complete" and not outcome.matches_E:
            raise InternalConsistencyError(
                f"search found f({outcome.n},4) != |E| although counting passed")
    for outcome in uniq.outcomes:
        if outcome.status == "complete" and outcome.E_is_unique_maximum is not True:
            raise InternalConsistencyError(
                f"search disagrees with the uniqueness chain at n={outcome.n}")

    evidence = [
        BaseEvidence(n=r.n, grade="uniqueness", passed=r.passed,
                     source="counting + uniqueness chain")
        for r in chain
    ]
    extra = (
        {"component": "counting-range", "from": 7, "to": 199,
         "status": "pass" if counting_ok else "fail"},
        {"component": "size-equality", "from": 7, "to": 48,
         "status": "pass" if all(r.passed for r in counting[:42]) else "fail",
         "source": "counting"},
        {"component": "search-cross-check", "from": 7, "to": 60,
         "status": "pass" if values.all_complete and uniq.all_complete else
                   "budget_exceeded"},
        {"claim": "conjecture1-k4", "n": 199,
         "status": "pass" if counting[199 - 7].passed else "fail",
         "source": "counting at n = P_4 - p_5"},
    )
    return assemble_theorem("theorem2", 4, THEOREM2_N0, THEOREM2_L0, cert,
                            evidence, extra)


def _budget_kwargs(budget_nodes, budget_ms) -> dict:
    kw = {}
    if budget_nodes is not None:
        kw["budget_nodes"] = budget_nodes
    if budget_ms is not None:
        kw["budget_ms"] = budget_ms
    return kw
