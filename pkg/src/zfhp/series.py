"""Truncated Taylor series on the unit disk and the h_k generators.

The central family is

    h_k(z) = (1/k) * (1 - z)^(-1) * log((1 + z + ... + z^(k-1)) / k),  k >= 2,

together with (I - S) h_k = (1 - z) h_k, where S is the shift operator
(multiplication by z).  Working with (1 - z) h_k first is convenient
because its Taylor coefficients have the closed form

    [(I - S) h_k]_0 = -log(k)/k,
    [(I - S) h_k]_m = (1/m) * (1/k - [k | m])       (m >= 1),

obtained from log(1 - z^k) = -sum_j z^(jk)/j and log(1 - z) = -sum_j z^j/j.
h_k itself is the cumulative sum (formal multiplication by 1/(1 - z)).

Everything here is value-semantic: operations return fresh series and the
stored coefficient arrays are read-only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import MobiusTable

__all__ = [
    "TruncatedSeries",
    "apply_one_minus_shift",
    "cumulative_sum",
    "ims_hk_coeffs",
    "hk_coeffs",
    "mobius_partial_sum_ims",
    "wn_operator",
]


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients a_0..a_N of an analytic function, truncated at degree N.

    Trailing zeros are never trimmed: ``degree`` is the storage degree.
    Coefficients are float64, or complex128 when any input is complex, and
    must all be finite.
    """

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.coeffs)
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError("coeffs must be a one-dimensional, nonempty array")
        if np.issubdtype(arr.dtype, np.complexfloating):
            arr = arr.astype(np.complex128, copy=True)
        else:
            arr = arr.astype(np.float64, copy=True)
        if not np.all(np.isfinite(arr)):
            raise ValueError("all coefficients must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __len__(self) -> int:
        return self.coeffs.size

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        a, b = _padded(self.coeffs, other.coeffs)
        return TruncatedSeries(a + b)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        a, b = _padded(self.coeffs, other.coeffs)
        return TruncatedSeries(a - b)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-self.coeffs)

    def __mul__(self, scalar) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs * scalar)

    __rmul__ = __mul__


def _padded(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if a.size == b.size:
        return a, b
    size = max(a.size, b.size)
    if a.size < size:
        a = np.concatenate([a, np.zeros(size - a.size, dtype=a.dtype)])
    else:
        b = np.concatenate([b, np.zeros(size - b.size, dtype=b.dtype)])
    return a, b


def apply_one_minus_shift(f: TruncatedSeries) -> TruncatedSeries:
    """(I - S) f = (1 - z) f, truncated to the degree of f."""
    a = f.coeffs
    out = np.empty_like(a)
    out[0] = a[0]
    if a.size > 1:
        out[1:] = a[1:] - a[:-1]
    return TruncatedSeries(out)


def cumulative_sum(f: TruncatedSeries) -> TruncatedSeries:
    """Formal multiplication by 1/(1 - z): running sums of the coefficients."""
    return TruncatedSeries(np.cumsum(f.coeffs))


def ims_hk_coeffs(k: int, degree: int) -> TruncatedSeries:
    """Taylor coefficients of (I - S) h_k up to ``degree`` (closed form)."""
    _check_k(k)
    if degree < 0:
        raise ValueError("degree must be >= 0")
    out = np.empty(degree + 1, dtype=np.float64)
    out[0] = -math.log(k) / k
    if degree >= 1:
        m = np.arange(1, degree + 1, dtype=np.float64)
        a = (1.0 / k) / m
        a[k - 1 :: k] -= 1.0 / m[k - 1 :: k]
        out[1:] = a
    return TruncatedSeries(out)


def hk_coeffs(k: int, degree: int) -> TruncatedSeries:
    """Taylor coefficients of h_k up to ``degree``.

    Computed as the cumulative sum of the (I - S) h_k coefficients, so
    ``apply_one_minus_shift(hk_coeffs(k, N))`` recovers
    ``ims_hk_coeffs(k, N)`` up to floating-point associativity.
    """
    return cumulative_sum(ims_hk_coeffs(k, degree))


def mobius_partial_sum_ims(n: int, degree: int, table: MobiusTable) -> TruncatedSeries:
    """Sum over k = 2..n of mu(k) * (I - S) h_k, truncated at ``degree``.

    Accumulation runs in increasing k, giving deterministic results.  For
    m >= 1 the z^m coefficient equals

        (1/m) * ( sum_{k=2..n} mu(k)/k  -  sum_{d | m, 2 <= d <= n} mu(d) ),

    which the tests use as an independent cross-check.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if n > table.limit:
        raise ValueError(f"n = {n} exceeds table limit {table.limit}")
    if degree < 0:
        raise ValueError("degree must be >= 0")
    acc = np.zeros(degree + 1, dtype=np.float64)
    inv = inverse_index(degree)
    for k in range(2, n + 1):
        mu = int(table.values[k])
        if mu:
            accumulate_ims(acc, k, float(mu), inv)
    return TruncatedSeries(acc)


def inverse_index(degree: int) -> np.ndarray:
    """Array [0, 1, 1/2, ..., 1/degree]; entry 0 is a placeholder."""
    inv = np.zeros(degree + 1, dtype=np.float64)
    if degree >= 1:
        inv[1:] = 1.0 / np.arange(1, degree + 1, dtype=np.float64)
    return inv


def accumulate_ims(acc: np.ndarray, k: int, weight: float, inv: np.ndarray) -> None:
    """Add weight * (I - S) h_k to ``acc`` in place (``inv`` from inverse_index)."""
    acc[0] += weight * (-math.log(k) / k)
    if acc.size > 1:
        acc[1:] += (weight / k) * inv[1:]
        if k < acc.size:
            acc[k::k] -= weight * inv[k::k]


def wn_operator(f: TruncatedSeries, n: int, cap: int | None = None) -> TruncatedSeries:
    """Weighted composition W_n f(z) = (1 + z + ... + z^(n-1)) f(z^n).

    The m-th output coefficient is a_{floor(m/n)}; the result has degree
    n * deg(f) + n - 1, truncated at ``cap`` when given.  The family is a
    semigroup: W_m (W_n f) = W_{mn} f within the degree cap.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    out = np.repeat(f.coeffs, n)
    if cap is not None:
        if cap < 0:
            raise ValueError("cap must be >= 0")
        out = out[: cap + 1]
    return TruncatedSeries(out)


def _check_k(k: int) -> None:
    if k < 2:
        raise ValueError("k must be an integer >= 2")
