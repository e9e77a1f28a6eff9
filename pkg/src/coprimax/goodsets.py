"""Good sets, l-good sets, and the generated block families for the window
residues near zero and at the two lookahead primes.

A set {a_1 < ... < a_t} is *good* (for a basis with primorial P) when
gcd(a_i, a_j, P) = 1 for every pair and no pairwise difference has a prime
factor exceeding p_k.  Translating a good set by P*l yields pairwise coprime
integers for every l.

The *l-good* weakening only requires the translates to be pairwise coprime
for the l under consideration.  This module decides l-goodness symbolically,
prime by prime over each pairwise difference:

  * q | P:       the translate is divisible by q iff the element is, so the
                 pair fails exactly when q divides both elements;
  * q = modulus of a congruence condition on P*l + anchor:  the condition
                 pins the residue of P*l mod q, so the translate's residue is
                 decided by the element's residue relative to the anchor;
  * any other q: P*l sweeps every residue mod q as l varies, so some l makes
                 the translate divisible by q and the pair fails.

With no condition this reduces exactly to the good-set criterion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import PrimeBasis, is_prime, prime_factors
from .errors import InternalConsistencyError

GOOD = "good"
L_GOOD_UNDER_CONDITION = "l_good_under_condition"
NOT_L_GOOD = "not_l_good"


@dataclass(frozen=True)
class CongruenceCondition:
    """A single-prime condition on l: `prime` divides P*l + anchor, or not."""

    prime: int
    divides: bool
    anchor: int

    def __post_init__(self) -> None:
        if not is_prime(self.prime):
            raise ValueError(f"condition modulus {self.prime} is not prime")

    def validate_for(self, basis: PrimeBasis) -> None:
        if basis.primorial % self.prime == 0:
            raise ValueError(
                f"condition modulus {self.prime} divides the primorial; "
                "the condition would be constant in l"
            )

    def describe(self) -> str:
        rel = "|" if self.divides else "∤"
        return f"{self.prime} {rel} P*l + {self.anchor}"

    def to_json_dict(self) -> dict:
        return {"prime": self.prime, "divides": self.divides, "anchor": self.anchor}

    @classmethod
    def from_json_dict(cls, obj: dict) -> "CongruenceCondition":
        return cls(prime=int(obj["prime"]), divides=bool(obj["divides"]),
                   anchor=int(obj["anchor"]))


@dataclass(frozen=True)
class GoodSetVerdict:
    status: str
    failing_pair: tuple[int, int, int] | None = None  # (a_i, a_j, offending prime)

    @property
    def ok(self) -> bool:
        return self.status != NOT_L_GOOD


def _pair_failure(basis: PrimeBasis, x: int, y: int,
                  cond: CongruenceCondition | None) -> int | None:
    """The smallest prime witnessing that the pair (x, y) breaks l-goodness,
    or None if the pair is safe under the given condition."""
    P = basis.primorial
    for q in sorted(prime_factors(y - x)):
        if P % q == 0:
            if x % q == 0:  # then y too, since q | y - x
                return q
        elif cond is not None and q == cond.prime:
            anchored = (x - cond.anchor) % q == 0
            if cond.divides:
                # P*l = -anchor (mod q): translate vanishes iff x = anchor
                if anchored:
                    return q
            else:
                # P*l + anchor is a nonzero residue; only x = anchor inherits it
                if not anchored:
                    return q
        else:
            return q
    return None


def is_l_good_under(basis: PrimeBasis, elements,
                    cond: CongruenceCondition | None = None) -> GoodSetVerdict:
    """Symbolic l-goodness check; reports the first failing pair in
    lexicographic order of the sorted elements."""
    if cond is not None:
        cond.validate_for(basis)
    elems = sorted(elements)
    if len(elems) != len(set(elems)):
        raise ValueError("elements must be distinct")
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            q = _pair_failure(basis, elems[i], elems[j], cond)
            if q is not None:
                return GoodSetVerdict(NOT_L_GOOD, (elems[i], elems[j], q))
    return GoodSetVerdict(GOOD if cond is None else L_GOOD_UNDER_CONDITION)


def is_good_set(basis: PrimeBasis, elements) -> GoodSetVerdict:
    """The unconditioned criterion: pairwise gcds coprime to the primorial
    and all pairwise differences p_k-smooth."""
    return is_l_good_under(basis, elements, None)


def _checked(basis: PrimeBasis, a: int, blocks: list[list[int]], origin: str):
    for block in blocks:
        verdict = is_good_set(basis, block)
        if not verdict.ok:
            raise InternalConsistencyError(
                f"{origin} block for a={a} failed the good-set check: "
                f"pair {verdict.failing_pair}"
            )
    return a, blocks


def lemma1_entries(basis: PrimeBasis) -> list[tuple[int, list[list[int]]]]:
    """Block families covering a = -1 and a = 1.

    Both use the negated base primes; the a = 1 family adds 1 itself.  Every
    emitted block is re-verified good rather than trusted by construction.

    For k = 1 only the a = -1 family is emitted: 1 - (-2) = 3 is not 2-smooth
    (the translates 2l - 2 and 2l + 1 share the factor 3 whenever 3 divides
    2l + 1), and the k = 1 window tops out at -1 anyway.
    """
    neg = [-p for p in reversed(basis.base_primes)]
    entries = [_checked(basis, -1, [neg + [-1]], "lemma1")]
    if basis.k >= 2:
        entries.append(_checked(basis, 1, [neg + [-1, 1]], "lemma1"))
    return entries


def lemma2_entries(basis: PrimeBasis) -> list[tuple[int, list[list[int]]]]:
    """Block families covering a = p_{k+1} and a = p_{k+2}.

    For a = p_{k+2} the block keeps all of p_1..p_{k+2} when p_{k+2} - 2 is
    composite; otherwise p_{k+2} - 4 is the composite even gap and the block
    replaces p_1 = 2 by 4.
    """
    base = list(basis.base_primes)
    p_k1, p_k2 = basis.p_k1, basis.p_k2
    entries = [_checked(basis, p_k1, [base + [p_k1]], "lemma2")]
    if is_prime(p_k2 - 2):
        block = [base[0] ** 2] + base[1:] + [p_k1, p_k2]
    else:
        block = base + [p_k1, p_k2]
    entries.append(_checked(basis, p_k2, [block], "lemma2"))
    return entries
