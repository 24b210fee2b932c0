"""Complex special functions on the right half-plane.

Implements the evaluation data behind the functionals:

    f_k(s) = -(1/s) * ((k+1)^(1-s) - k^(1-s))          (Re(s) > 0, k >= 1)
    G_k(s) = -(zeta(s)/s) * (k^(-s) - 1/k)             (k >= 2, s != 1)

plus a zeta evaluator valid on Re(s) > 0 away from the pole, and Mellin
transform checks for the step functions p_k and the fractional-part
combinations rho_alpha(x) = rho(alpha/x) - alpha * rho(1/x).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .errors import ConditioningError, DomainError, PoleError

__all__ = [
    "ZetaValue",
    "f_k",
    "fk_values",
    "fk_upper_bound",
    "lambda_on_constant",
    "zeta",
    "g_k",
    "mellin_step_pk",
    "mellin_rho_alpha",
    "rho_alpha_tail_bound",
    "require_right_half_plane",
]

_LN2 = math.log(2.0)
_ACCEL = 3.0 + math.sqrt(8.0)
# d_n in the accelerated eta series grows like (3 + sqrt 8)^n; keep it well
# inside float range.
_MAX_ETA_TERMS = 280


def require_right_half_plane(s) -> complex:
    """Validate Re(s) > 0 and return s as a complex number."""
    s = complex(s)
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise DomainError(f"s must be finite, got {s}")
    if not s.real > 0.0:
        raise DomainError(f"Re(s) must be positive, got s = {s}")
    return s


def _cexpm1(w):
    """exp(w) - 1 for complex w without cancellation near w = 0 (vectorized)."""
    x = np.real(w)
    y = np.imag(w)
    re = np.expm1(x) * np.cos(y) - 2.0 * np.sin(0.5 * y) ** 2
    im = np.exp(x) * np.sin(y)
    return re + 1j * im


def f_k(k: int, s) -> complex:
    """Cancellation-safe f_k(s) = -(1/s) ((k+1)^(1-s) - k^(1-s)).

    Uses (k+1)^(1-s) - k^(1-s) = k^(1-s) * expm1((1-s) log1p(1/k)); the
    naive difference loses most significant digits once k is large.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    s = require_right_half_plane(s)
    w = (1.0 - s) * math.log1p(1.0 / k)
    power = cmath.exp((1.0 - s) * math.log(k))
    return -(1.0 / s) * power * complex(_cexpm1(w))


def fk_values(n_max: int, s) -> np.ndarray:
    """Vector [f_1(s), ..., f_{n_max}(s)]."""
    if n_max < 1:
        raise ValueError("n_max must be a positive integer")
    s = require_right_half_plane(s)
    n = np.arange(1, n_max + 1, dtype=np.float64)
    w = (1.0 - s) * np.log1p(1.0 / n)
    power = np.exp((1.0 - s) * np.log(n))
    return np.asarray((-1.0 / s) * power * _cexpm1(w), dtype=np.complex128)


def fk_upper_bound(k, s) -> float | np.ndarray:
    """Explicit bound |f_k(s)| <= (|1-s|/|s|) k^(-Re(s)), valid for all k >= 1.

    Follows from writing the difference of powers as (1-s) times the
    integral of y^(-s) over [k, k+1] and bounding the integrand at y = k.
    """
    s = require_right_half_plane(s)
    k = np.asarray(k, dtype=np.float64)
    out = (abs(1.0 - s) / abs(s)) * k ** (-s.real)
    return float(out) if out.ndim == 0 else out


def lambda_on_constant(s) -> complex:
    """Value of the evaluation functional on the constant function 1: -1/s."""
    s = require_right_half_plane(s)
    return -1.0 / s


@dataclass(frozen=True)
class ZetaValue:
    value: complex
    method: str
    terms_used: int


def zeta(s, *, target: float = 1e-13) -> ZetaValue:
    """zeta(s) for Re(s) > 0, s != 1, via the accelerated alternating series.

    Computes eta(s) = sum (-1)^(k-1) k^(-s) with Chebyshev-weighted series
    acceleration and divides by 1 - 2^(1-s).  The term count is chosen from
    the proven error envelope (1 + 2|t|) e^(pi |t| / 2) / (3 + sqrt 8)^n,
    giving relative error well below 1e-10 on moderate |Im(s)|.

    Raises ``PoleError`` at s = 1, ``ConditioningError`` on the line of
    spurious zeros of 1 - 2^(1-s) (s = 1 + 2 pi i m / log 2, m != 0).
    """
    s = require_right_half_plane(s)
    if abs(s - 1.0) < 1e-12:
        raise PoleError("zeta has a pole at s = 1")
    denom = -complex(_cexpm1((1.0 - s) * _LN2))  # 1 - 2^(1-s), cancellation-safe
    if abs(denom) < 1e-8:
        raise ConditioningError(
            f"1 - 2^(1-s) vanishes near s = {s}; the eta-ratio evaluator is unusable there"
        )
    n = _eta_terms(s, target)
    eta = _eta_accelerated(s, n)
    return ZetaValue(value=eta / denom, method="accelerated-eta", terms_used=n)


def _eta_terms(s: complex, target: float) -> int:
    t = abs(s.imag)
    need = (math.log(3.0 / target) + math.log1p(2.0 * t) + 0.5 * math.pi * t) / math.log(_ACCEL)
    n = int(math.ceil(need)) + 4
    if s.real < 0.5:
        n += 10
    n = max(n, 24)
    if n > _MAX_ETA_TERMS:
        raise DomainError(
            f"|Im(s)| = {t:g} is outside the working range of the eta evaluator"
        )
    return n


def _eta_accelerated(s: complex, n: int) -> complex:
    d = np.empty(n + 1, dtype=np.float64)
    term = 1.0
    d[0] = 1.0
    for i in range(1, n + 1):
        term *= 4.0 * (n + i - 1) * (n - i + 1) / (2.0 * i * (2.0 * i - 1.0))
        d[i] = d[i - 1] + term
    k = np.arange(n, dtype=np.float64)
    signs = np.where(k % 2 == 0, 1.0, -1.0)
    powers = np.exp(-s * np.log(k + 1.0))
    return -complex(np.sum(signs * (d[:n] - d[n]) * powers)) / d[n]


def g_k(k: int, s) -> complex:
    """G_k(s) = -(zeta(s)/s) (k^(-s) - 1/k) for k >= 2."""
    if k < 2:
        raise ValueError("k must be an integer >= 2")
    z = zeta(s).value
    s = complex(s)
    return -(z / s) * (cmath.exp(-s * math.log(k)) - 1.0 / k)


def _quad_complex(f, a: float, b: float) -> complex:
    re = quad(lambda x: f(x).real, a, b, epsabs=1e-12, epsrel=1e-12, limit=200)[0]
    im = quad(lambda x: f(x).imag, a, b, epsabs=1e-12, epsrel=1e-12, limit=200)[0]
    return complex(re, im)


def _power_integral_from_zero(s: complex, upper: float) -> complex:
    """int_0^upper x^(s-1) dx by adaptive quadrature after x = exp(-v).

    The substitution maps the singular oscillatory endpoint at x = 0 to an
    exponentially damped tail: the integrand becomes exp(-s v) on
    [-log(upper), infinity).  Truncating 40/Re(s) past the left edge
    leaves a remainder below exp(-40) of the head scale.
    """
    v0 = -math.log(upper)
    v1 = v0 + 40.0 / s.real
    return _quad_complex(lambda v: cmath.exp(-s * v), v0, v1)


def mellin_step_pk(k: int, s, *, check_tol: float = 1e-6) -> complex:
    """Mellin transform of the step function p_k, evaluated by quadrature.

    p_k equals k on [1/(k+1), 1/k), equals -1 on (0, 1/(k+1)) and vanishes
    elsewhere, so its transform is

        int_{1/(k+1)}^{1/k} k x^(s-1) dx - int_0^{1/(k+1)} x^(s-1) dx,

    which equals f_k(s).  Both integrals are evaluated by adaptive
    quadrature; the power-rule closed form is recomputed alongside as an
    internal consistency check.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    s = require_right_half_plane(s)
    lo = 1.0 / (k + 1)
    hi = 1.0 / k
    value = _quad_complex(lambda x: k * x ** (s - 1.0), lo, hi) - _power_integral_from_zero(s, lo)
    closed = (k * (hi**s - lo**s) - lo**s) / s
    if abs(value - closed) > check_tol * max(1.0, abs(closed)):
        raise ConditioningError(
            f"quadrature {value} and closed form {closed} disagree for k={k}, s={s}"
        )
    return value


def mellin_rho_alpha(alpha: float, s, truncation: float = 1e-5) -> complex:
    """Mellin transform of rho_alpha over (truncation, 1), piecewise exactly.

    rho_alpha(x) = rho(alpha/x) - alpha rho(1/x) is constant between
    consecutive breakpoints 1/n and alpha/m, where it equals
    alpha*floor(1/x) - floor(alpha/x); on each such interval the integral
    of x^(s-1) has the exact antiderivative x^s / s.  The omitted piece
    over (0, truncation] is bounded by ``rho_alpha_tail_bound``.  The total
    matches (zeta(s)/s) (alpha - alpha^s).
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError("alpha must lie in (0, 1)")
    if not 0.0 < truncation < 1.0:
        raise ValueError("truncation must lie in (0, 1)")
    s = require_right_half_plane(s)
    n_hi = int(math.floor(1.0 / truncation)) + 1
    m_hi = int(math.floor(alpha / truncation)) + 1
    cuts = np.concatenate(
        [
            np.array([truncation, 1.0]),
            1.0 / np.arange(1, n_hi + 1, dtype=np.float64),
            alpha / np.arange(1, m_hi + 1, dtype=np.float64),
        ]
    )
    cuts = np.unique(cuts[(cuts >= truncation) & (cuts <= 1.0)])
    a = cuts[:-1]
    b = cuts[1:]
    mid = 0.5 * (a + b)
    levels = alpha * np.floor(1.0 / mid) - np.floor(alpha / mid)
    pow_b = np.exp(s * np.log(b))
    pow_a = np.exp(s * np.log(a))
    return complex(np.sum(levels * (pow_b - pow_a)) / s)


def rho_alpha_tail_bound(s, truncation: float) -> float:
    """Upper bound for the omitted integral over (0, truncation]: T^sigma / sigma.

    Uses |rho_alpha(x)| < 1, which holds since both fractional parts lie
    in [0, 1) and 0 < alpha < 1.
    """
    s = require_right_half_plane(s)
    return truncation**s.real / s.real
