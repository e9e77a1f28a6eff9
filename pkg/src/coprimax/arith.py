"""Prime arithmetic: sieves, primorials, and the sets F_k, E(n,k), T_k.

Conventions used throughout the package:
  * primes are 1-indexed, p_1 = 2;
  * F_k is the set of all integers (any sign) divisible by at least one of
    p_1..p_k, so membership depends only on gcd with the primorial P_k;
  * T_k is the set of residues in [-p_{k+1}+1, P_k - p_{k+1}] coprime to P_k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# P_15 = 614889782588491410 is the last primorial below 2**63; the basis
# constructor refuses larger k so downstream fixed-width consumers are safe.
MAX_BASIS_K = 15

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit in ascending order (empty list for limit < 2)."""
    if limit < 2:
        return []
    sieve = bytearray(b"\x01") * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            start = p * p
            sieve[start :: p] = b"\x00" * (((limit - start) // p) + 1)
    return [i for i in range(2, limit + 1) if sieve[i]]


def first_primes(count: int) -> list[int]:
    """The first `count` primes."""
    if count <= 0:
        return []
    if count <= len(_SMALL_PRIMES):
        return list(_SMALL_PRIMES[:count])
    # p_m <= m(ln m + ln ln m) for m >= 6, so this bound rarely needs a retry
    bound = int(count * (math.log(count) + math.log(math.log(count)))) + 10
    primes = sieve_primes(bound)
    while len(primes) < count:
        bound *= 2
        primes = sieve_primes(bound)
    return primes[:count]


def is_prime(m: int) -> bool:
    """Trial-division primality check (inputs here stay far below 10**12)."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    for d in range(3, math.isqrt(m) + 1, 2):
        if m % d == 0:
            return False
    return True


@dataclass(frozen=True)
class Window:
    """Inclusive integer interval [lo, hi]; bounds may be negative."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty window: lo={self.lo} > hi={self.hi}")

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, m: int) -> bool:
        return self.lo <= m <= self.hi


@dataclass(frozen=True)
class PrimeBasis:
    """The first k primes plus the two lookahead primes p_{k+1}, p_{k+2}.

    `primorial` is the exact product p_1 * ... * p_k.  The Bertrand gap
    p_{k+2} < 2 p_{k+1}, needed by the a = p_{k+2} construction, is checked at
    construction time rather than assumed.
    """

    k: int
    primes: tuple[int, ...]
    primorial: int

    @property
    def p_k1(self) -> int:
        return self.primes[self.k]

    @property
    def p_k2(self) -> int:
        return self.primes[self.k + 1]

    @property
    def base_primes(self) -> tuple[int, ...]:
        return self.primes[: self.k]


def make_basis(k: int) -> PrimeBasis:
    """Build the prime basis for k base primes.

    Refuses k > 15: the primorial would no longer fit in 64 bits and nothing
    in scope needs it.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k > MAX_BASIS_K:
        raise ValueError(
            f"k={k} unsupported: primorial exceeds 64 bits for k > {MAX_BASIS_K}"
        )
    primes = tuple(first_primes(k + 2))
    primorial = math.prod(primes[:k])
    if not primes[k + 1] < 2 * primes[k]:
        raise AssertionError(f"Bertrand check failed for k={k}: {primes}")
    return PrimeBasis(k=k, primes=primes, primorial=primorial)


def in_F_k(basis: PrimeBasis, m: int) -> bool:
    """True iff some base prime divides m.  Note 0 is divisible by every
    prime, so in_F_k(basis, 0) is True."""
    if m == 0:
        return True
    return math.gcd(m, basis.primorial) > 1


def count_E(basis: PrimeBasis, n: int) -> int:
    """|E(n,k)| = number of m in [1,n] divisible by some base prime."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    coprime = sum(1 for m in range(1, n + 1) if math.gcd(m, basis.primorial) == 1)
    return n - coprime


def E_elements(basis: PrimeBasis, n: int) -> list[int]:
    """The members of E(n,k) in ascending order."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return [m for m in range(1, n + 1) if math.gcd(m, basis.primorial) > 1]


def window_T_k(basis: PrimeBasis) -> Window:
    """The residue window [-p_{k+1}+1, P_k - p_{k+1}] that T_k lives in."""
    return Window(-basis.p_k1 + 1, basis.primorial - basis.p_k1)


def compute_T_k(basis: PrimeBasis) -> list[int]:
    """All residues in the T_k window coprime to the primorial, ascending."""
    win = window_T_k(basis)
    P = basis.primorial
    return [a for a in range(win.lo, win.hi + 1) if math.gcd(a, P) == 1]


def largest_prime_factor(m: int) -> int | None:
    """Largest prime dividing |m|; None for m in {-1, 0, 1}.

    0 has no largest prime factor even though every prime divides it, hence
    the None convention there as well.
    """
    m = abs(m)
    if m <= 1:
        return None
    largest = None
    while m % 2 == 0:
        largest = 2
        m //= 2
    d = 3
    while d * d <= m:
        while m % d == 0:
            largest = d
            m //= d
        d += 2
    if m > 1:
        largest = m
    return largest


def prime_factors(m: int) -> frozenset[int]:
    """The set of primes dividing |m| (empty for m in {-1, 0, 1}).

    Callers that care about 0 must special-case it first: this returns an
    empty set for 0 although every prime divides it.
    """
    m = abs(m)
    out = set()
    if m <= 1:
        return frozenset()
    while m % 2 == 0:
        out.add(2)
        m //= 2
    d = 3
    while d * d <= m:
        while m % d == 0:
            out.add(d)
            m //= d
        d += 2
    if m > 1:
        out.add(m)
    return frozenset(out)
