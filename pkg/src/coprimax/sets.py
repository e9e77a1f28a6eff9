"""Integer sets over a window, pairwise-coprime cliques, admissibility.

Coprimality of two integers depends only on their prime supports: x and y
are coprime iff their supports are disjoint.  The clique search therefore
deduplicates elements by support (keeping the smallest member of each class,
which is the one a lexicographically least witness would use) and runs a
backtracking search in ascending element order, so the first clique found is
the lexicographically least one.

Special supports: 1 and -1 have empty support and are coprime to everything,
including each other; 0 is coprime only to 1 and -1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import Window, prime_factors

# Sentinel support for 0, which shares a factor with every |m| > 1.
_ZERO = object()


@dataclass(frozen=True)
class CandidateSet:
    """A finite integer set as a bitmask over an inclusive window."""

    window: Window
    bits: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> len(self.window):
            raise ValueError("membership mask extends beyond the window")

    @classmethod
    def from_elements(cls, elements, window: Window | None = None) -> "CandidateSet":
        elems = sorted(set(elements))
        if window is None:
            if not elems:
                raise ValueError("cannot infer a window for an empty set")
            window = Window(elems[0], elems[-1])
        bits = 0
        for m in elems:
            if m not in window:
                raise ValueError(f"element {m} outside window [{window.lo},{window.hi}]")
            bits |= 1 << (m - window.lo)
        return cls(window=window, bits=bits)

    @classmethod
    def empty(cls, window: Window) -> "CandidateSet":
        return cls(window=window, bits=0)

    def members(self) -> list[int]:
        lo = self.window.lo
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(lo + low.bit_length() - 1)
            bits ^= low
        return out

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, m: int) -> bool:
        return m in self.window and (self.bits >> (m - self.window.lo)) & 1 == 1

    def __iter__(self):
        return iter(self.members())

    def difference(self, elements) -> "CandidateSet":
        bits = self.bits
        for m in elements:
            if m in self:
                bits ^= 1 << (m - self.window.lo)
        return CandidateSet(self.window, bits)

    def union(self, elements) -> "CandidateSet":
        bits = self.bits
        for m in elements:
            if m not in self.window:
                raise ValueError(f"element {m} outside window")
            bits |= 1 << (m - self.window.lo)
        return CandidateSet(self.window, bits)


@dataclass(frozen=True)
class CliqueWitness:
    """An ascending tuple of pairwise coprime integers."""

    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if list(self.elements) != sorted(set(self.elements)):
            raise ValueError("witness elements must be distinct and ascending")
        if not is_pairwise_coprime(self.elements):
            raise ValueError("witness elements are not pairwise coprime")

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class AdmissibilityVerdict:
    admissible: bool
    witness: CliqueWitness | None


def is_pairwise_coprime(elements) -> bool:
    """True iff gcd(x, y) = 1 for every pair of the given distinct integers."""
    elems = list(elements)
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            if math.gcd(elems[i], elems[j]) != 1:
                return False
    return True


def _support(m: int):
    if m == 0:
        return _ZERO
    return prime_factors(m)


def _disjoint(s, t) -> bool:
    # 0 shares a factor with everything except the empty-support elements.
    if s is _ZERO:
        return t is not _ZERO and not t
    if t is _ZERO:
        return not s
    return s.isdisjoint(t)


def _clique_nodes(elements):
    """Deduplicate by support, keeping the smallest member of each class.

    1, -1 and 0 each form their own class: 1 and -1 share the empty support
    but are coprime to each other, so they must stay distinct nodes.
    """
    nodes = []
    seen = set()
    for m in sorted(elements):
        sup = _support(m)
        key = m if (sup is _ZERO or not sup) else sup
        if key in seen:
            continue
        seen.add(key)
        nodes.append((m, sup))
    return nodes


def find_clique_in_elements(elements, size: int) -> CliqueWitness | None:
    """Lexicographically least pairwise-coprime subset of the given size."""
    if size < 1:
        raise ValueError(f"size must be >= 1, got {size}")
    nodes = _clique_nodes(elements)
    n = len(nodes)
    chosen: list[int] = []

    def extend(start: int, need: int) -> bool:
        if need == 0:
            return True
        # distinct-smallest-prime classes bound: within one class no two
        # supports are disjoint, so each class contributes at most one member
        classes = set()
        compat = []
        for i in range(start, n):
            m, sup = nodes[i]
            if all(_disjoint(sup, nodes[j][1]) for j in chosen):
                compat.append(i)
                if sup is _ZERO:
                    classes.add(_ZERO)
                elif not sup:
                    classes.add(m)  # 1 and -1 are universal joiners
                else:
                    classes.add(min(sup))
        if len(classes) < need:
            return False
        for i in compat:
            chosen.append(i)
            if extend(i + 1, need - 1):
                return True
            chosen.pop()
        return False

    if extend(0, size):
        return CliqueWitness(tuple(nodes[i][0] for i in chosen))
    return None


def find_coprime_clique(candidate: CandidateSet, size: int) -> CliqueWitness | None:
    """Lexicographically least coprime clique of the given size, or None."""
    return find_clique_in_elements(candidate.members(), size)


def is_admissible(candidate: CandidateSet, k: int) -> AdmissibilityVerdict:
    """Admissible iff the set contains no k+1 pairwise coprime members."""
    witness = find_coprime_clique(candidate, k + 1)
    return AdmissibilityVerdict(admissible=witness is None, witness=witness)


def is_admissible_elements(elements, k: int) -> AdmissibilityVerdict:
    """Admissibility for a bare element list (windows with translates)."""
    witness = find_clique_in_elements(elements, k + 1)
    return AdmissibilityVerdict(admissible=witness is None, witness=witness)
