"""Scan prime indices t for the prime-gap condition

    (H)   p_{t+7} * p_{t+8} < p_t * p_{t+9}   and   p_{t+9} < p_t**2,

under which, for k = t + 3, admissible sets strictly larger than the
multiples of the first k primes exist at some n.

The first inequality is read as "some n fits in the window", i.e. the strict
product inequality; products are exact integers throughout.  Indexing is
1-based (p_1 = 2).
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import first_primes


@dataclass(frozen=True)
class HRecord:
    t: int
    p_t: int
    p_t7: int
    p_t8: int
    p_t9: int
    window_nonempty: bool
    square_ok: bool

    @property
    def holds(self) -> bool:
        return self.window_nonempty and self.square_ok

    def to_json_dict(self) -> dict:
        return {
            "t": self.t,
            "p_t": self.p_t,
            "p_t_plus_7": self.p_t7,
            "p_t_plus_8": self.p_t8,
            "p_t_plus_9": self.p_t9,
            "window_nonempty": self.window_nonempty,
            "square_ok": self.square_ok,
            "holds": self.holds,
        }


def scan_records(t_max: int) -> list[HRecord]:
    """One record per t in [1, t_max]."""
    if t_max < 1:
        raise ValueError(f"t_max must be >= 1, got {t_max}")
    primes = first_primes(t_max + 9)
    out = []
    for t in range(1, t_max + 1):
        p_t, p7, p8, p9 = (primes[t - 1], primes[t + 6], primes[t + 7],
                           primes[t + 8])
        out.append(HRecord(
            t=t, p_t=p_t, p_t7=p7, p_t8=p8, p_t9=p9,
            window_nonempty=p7 * p8 < p_t * p9,
            square_ok=p9 < p_t * p_t,
        ))
    return out


def scan_H(t_max: int) -> list[HRecord]:
    """All t <= t_max where (H) holds, ascending."""
    return [r for r in scan_records(t_max) if r.holds]


def h_density(t_max: int) -> tuple[int, int, float]:
    """(hit count, t_max, hit ratio); exploration plumbing."""
    hits = len(scan_H(t_max))
    return hits, t_max, hits / t_max
