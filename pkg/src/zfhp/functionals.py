"""Evaluation functionals applied to truncated series, with honest tail bounds.

The functional sends 1 to -1/s and z^n to f_n(s); on a truncated series it
is the finite sum a_0 (-1/s) + sum_{n=1..N} a_n f_n(s).  Because the h_k
coefficients decay like C/m, the discarded tail beyond degree N admits the
bound C (|1-s|/|s|) N^(-sigma) / sigma with sigma = Re(s), reported next to
every value instead of being silently dropped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import MobiusTable
from .series import TruncatedSeries
from .special import fk_values, require_right_half_plane, zeta

__all__ = [
    "FunctionalEvaluation",
    "coefficient_tail_slope",
    "lambda_apply",
    "approx_reciprocal_s",
    "lambda_linearity_check",
]


@dataclass(frozen=True)
class FunctionalEvaluation:
    s: complex
    value: complex
    tail_bound: float
    degree_used: int


def _fsum_complex(terms: np.ndarray) -> complex:
    terms = np.asarray(terms, dtype=np.complex128)
    return complex(math.fsum(terms.real.tolist()), math.fsum(terms.imag.tolist()))


def coefficient_tail_slope(f: TruncatedSeries) -> float:
    """Fitted C with |a_m| <= C/m over the top half of the stored range.

    Returns max of m |a_m| for ceil(N/2) <= m <= N (0 when the series is a
    constant), the empirical substitute for a true tail envelope.
    """
    n = f.degree
    if n < 1:
        return 0.0
    lo = (n + 1) // 2
    m = np.arange(lo, n + 1, dtype=np.float64)
    return float(np.max(m * np.abs(f.coeffs[lo:])))


def lambda_apply(f: TruncatedSeries, s, coeff_bound: float | None = None) -> FunctionalEvaluation:
    """Apply the evaluation functional to a truncated series.

    Terms are summed in increasing degree with exactly rounded compensated
    accumulation.  ``coeff_bound`` overrides the fitted tail constant C;
    the reported ``tail_bound`` is C (|1-s|/|s|) N^(-Re s)/Re(s), monotone
    nonincreasing in the degree for fixed C.
    """
    s = require_right_half_plane(s)
    a = f.coeffs
    n = f.degree
    terms = np.empty(n + 1, dtype=np.complex128)
    terms[0] = complex(a[0]) * (-1.0 / s)
    if n >= 1:
        terms[1:] = a[1:] * fk_values(n, s)
    value = _fsum_complex(terms)
    c = coefficient_tail_slope(f) if coeff_bound is None else float(coeff_bound)
    if c < 0.0:
        raise ValueError("coeff_bound must be nonnegative")
    if c == 0.0 or n == 0:
        tail = 0.0
    else:
        sigma = s.real
        tail = c * (abs(1.0 - s) / abs(s)) * float(n) ** (-sigma) / sigma
    return FunctionalEvaluation(s=s, value=value, tail_bound=tail, degree_used=n)


def approx_reciprocal_s(n: int, s, table: MobiusTable) -> complex:
    """Partial linear combination sum_{k=2..n} mu(k) G_k(s).

    The candidate approximant to -1/s; convergence is guaranteed for
    Re(s) > 1 (where sum mu(k) k^(-s) = 1/zeta(s)), while for
    1/2 < Re(s) <= 1 the residual is reported without any convergence
    claim.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if n > table.limit:
        raise ValueError(f"n = {n} exceeds table limit {table.limit}")
    z = zeta(s).value
    s = complex(s)
    k = np.arange(2, n + 1, dtype=np.float64)
    mu = table.values[2 : n + 1].astype(np.float64)
    terms = mu * (np.exp(-s * np.log(k)) - 1.0 / k)
    return -(z / s) * _fsum_complex(terms)


def lambda_linearity_check(f: TruncatedSeries, g: TruncatedSeries, a, b, s) -> float:
    """|Lambda(a f + b g) - a Lambda(f) - b Lambda(g)| at the point s."""
    s = require_right_half_plane(s)
    combo = a * f + b * g
    lhs = lambda_apply(combo, s).value
    rhs = a * lambda_apply(f, s).value + b * lambda_apply(g, s).value
    return abs(lhs - rhs)
