"""Number-theoretic kernel: Möbius function, divisor counts, partial sums.

Tables are built once by a sieve and are immutable afterwards, so they can
be shared freely between threads.  All partial sums run over increasing
index and use exactly rounded compensated accumulation (``math.fsum``), so
repeated runs on one platform reproduce results bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "MobiusTable",
    "DivisorCountTable",
    "build_mobius",
    "build_divisor_counts",
    "mobius_sum_over_k",
    "mobius_logsum_over_k",
    "bounded_divisor_sum",
]


@dataclass(frozen=True)
class MobiusTable:
    """Values mu(1), ..., mu(limit) of the Möbius function.

    ``values`` has length ``limit + 1``; index 0 is unused and holds 0.
    """

    limit: int
    values: np.ndarray

    def mu(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise ValueError(f"n = {n} outside table range 1..{self.limit}")
        return int(self.values[n])


@dataclass(frozen=True)
class DivisorCountTable:
    """Divisor counts tau(1), ..., tau(limit); index 0 unused."""

    limit: int
    counts: np.ndarray

    def tau(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise ValueError(f"n = {n} outside table range 1..{self.limit}")
        return int(self.counts[n])


def build_mobius(limit: int) -> MobiusTable:
    """Sieve mu(n) for all n <= limit with the linear (one-pass) sieve.

    Each composite is crossed off exactly once by its smallest prime
    factor, giving O(limit) work.
    """
    if limit < 1:
        raise ValueError("limit must be a positive integer")
    mu = [0] * (limit + 1)
    mu[1] = 1
    is_comp = bytearray(limit + 1)
    primes: list[int] = []
    for i in range(2, limit + 1):
        if not is_comp[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            ip = i * p
            if ip > limit:
                break
            is_comp[ip] = 1
            if i % p == 0:
                mu[ip] = 0
                break
            mu[ip] = -mu[i]
    values = np.array(mu, dtype=np.int8)
    values.setflags(write=False)
    return MobiusTable(limit=limit, values=values)


def build_divisor_counts(limit: int) -> DivisorCountTable:
    """Exact tau(n) for all n <= limit by sieving multiples of every d."""
    if limit < 1:
        raise ValueError("limit must be a positive integer")
    counts = np.zeros(limit + 1, dtype=np.int32)
    for d in range(1, limit + 1):
        counts[d::d] += 1
    counts.setflags(write=False)
    return DivisorCountTable(limit=limit, counts=counts)


def mobius_sum_over_k(table: MobiusTable, cutoff: int) -> float:
    """Partial sum of mu(k)/k for k = 1..cutoff (limit 0 as cutoff grows)."""
    _check_cutoff(table, cutoff)
    k = np.arange(1, cutoff + 1, dtype=np.float64)
    terms = table.values[1 : cutoff + 1] / k
    return math.fsum(terms.tolist())


def mobius_logsum_over_k(table: MobiusTable, cutoff: int) -> float:
    """Partial sum of mu(k) log(k)/k for k = 1..cutoff (limit -1)."""
    _check_cutoff(table, cutoff)
    k = np.arange(1, cutoff + 1, dtype=np.float64)
    terms = table.values[1 : cutoff + 1] * np.log(k) / k
    return math.fsum(terms.tolist())


def bounded_divisor_sum(j: int, n: int, table: MobiusTable) -> int:
    """Sum of mu(d) over the divisors d of j with d <= n.

    The result is an exact integer and satisfies |result| <= tau(j).  Every
    divisor of j that is <= n must be covered by the table.
    """
    if j < 1 or n < 1:
        raise ValueError("j and n must be positive integers")
    total = 0
    for a in range(1, math.isqrt(j) + 1):
        if j % a:
            continue
        b = j // a
        for d in (a, b) if a != b else (a,):
            if d <= n:
                if d > table.limit:
                    raise ValueError(
                        f"divisor {d} of {j} is <= n but beyond the table limit {table.limit}"
                    )
                total += int(table.values[d])
    return total


def _check_cutoff(table: MobiusTable, cutoff: int) -> None:
    if cutoff < 1:
        raise ValueError("cutoff must be a positive integer")
    if cutoff > table.limit:
        raise ValueError(f"cutoff {cutoff} exceeds table limit {table.limit}")
