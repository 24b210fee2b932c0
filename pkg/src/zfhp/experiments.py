"""Convergence experiments, their records, manifests and CSV output.

Runners:

* ``run_lq_convergence``: l^q distance of sum_{k=2..n} mu(k) (I - S) h_k
  from 1 - z, with a truncation tail bound built from divisor counts.
* ``run_hp_convergence``: H^p quasi-norm distance of sum mu(k) h_k from 1
  for 0 < p < 1, with quadrature-refinement control.
* ``run_lambda_sweep``: residuals of the identity Lambda^(s)(h_k) = G_k(s)
  against their reported tail bounds.
* ``run_pointwise_approx``: residuals of sum mu(k) G_k(s) against -1/s.

Every record carries its coefficient cutoff and, where applicable, a tail
bound, so no number leaves this module without its truncation context.
A manifest (parameters + code version) fully determines a rerun; values
reproduce bit for bit on one platform, wall times of course do not.
"""

from __future__ import annotations

import csv
import hashlib
import json
import math
import time
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence, TextIO

import numpy as np

from ._version import __version__
from .arith import (
    DivisorCountTable,
    MobiusTable,
    build_divisor_counts,
    build_mobius,
    mobius_sum_over_k,
)
from .errors import DomainError
from .functionals import approx_reciprocal_s, lambda_apply
from .norms import QuadratureWarning, hp_norm_estimate, lq_norm
from .series import TruncatedSeries, accumulate_ims, hk_coeffs, inverse_index
from .special import g_k, lambda_on_constant
from .weights import ClassificationResult, ProbeResult

__all__ = [
    "ConvergenceRecord",
    "LambdaRecord",
    "ApproxRecord",
    "ExperimentManifest",
    "build_manifest",
    "rerun",
    "run_lq_convergence",
    "lq_residual_direct",
    "lq_tail_bound",
    "tau_envelope_constant",
    "run_hp_convergence",
    "run_lambda_sweep",
    "run_pointwise_approx",
    "write_convergence_csv",
    "write_lambda_csv",
    "write_approx_csv",
    "write_weights_csv",
    "write_probe_csv",
    "write_manifest",
]


@dataclass(frozen=True)
class ConvergenceRecord:
    n: int
    norm_kind: str
    param: float
    coeff_cutoff: int
    value: float
    tail_bound: float | None
    wall_time_ms: int


@dataclass(frozen=True)
class LambdaRecord:
    k: int
    s: complex
    residual: float
    tail_bound: float
    passed: bool


@dataclass(frozen=True)
class ApproxRecord:
    s: complex
    n: int
    residual: float


@dataclass(frozen=True)
class ExperimentManifest:
    """Everything needed to reproduce a run: name, parameters, seed, version."""

    experiment: str
    parameters: dict
    seed: int | None = None
    version: str = field(default=__version__)

    def canonical_json(self) -> str:
        payload = {
            "experiment": self.experiment,
            "parameters": self.parameters,
            "seed": self.seed,
            "version": self.version,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    @property
    def manifest_id(self) -> str:
        return hashlib.sha256(self.canonical_json().encode()).hexdigest()[:12]


def build_manifest(experiment: str, seed: int | None = None, **parameters) -> ExperimentManifest:
    return ExperimentManifest(experiment=experiment, parameters=parameters, seed=seed)


def rerun(manifest: ExperimentManifest):
    """Re-execute the run a manifest describes, returning its records."""
    p = manifest.parameters
    name = manifest.experiment
    if name == "lq_convergence":
        table = build_mobius(p["mobius_limit"])
        return run_lq_convergence(p["q"], p["n_list"], p["coeff_cutoff"], table)
    if name == "hp_convergence":
        table = build_mobius(p["mobius_limit"])
        return run_hp_convergence(p["p"], p["n_list"], p["coeff_cutoff"], p["nodes"], table)
    if name == "lambda_sweep":
        grid = [complex(re, im) for re, im in p["s_grid"]]
        return run_lambda_sweep(p["k_list"], grid, p["coeff_cutoff"])
    if name == "pointwise_approx":
        table = build_mobius(p["mobius_limit"])
        grid = [complex(re, im) for re, im in p["s_grid"]]
        return run_pointwise_approx(grid, p["n_list"], table)
    raise ValueError(f"unknown experiment {name!r}")


def _check_n_list(n_list: Sequence[int], table: MobiusTable, coeff_cutoff: int) -> list[int]:
    ns = [int(n) for n in n_list]
    if not ns or ns[0] < 2:
        raise ValueError("n_list must start at n >= 2")
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValueError("n_list must be strictly increasing")
    if ns[-1] > table.limit:
        raise ValueError(f"max n = {ns[-1]} exceeds table limit {table.limit}")
    if coeff_cutoff < ns[-1]:
        raise ValueError("coeff_cutoff must be >= max(n_list)")
    return ns


_TAU_CACHE: dict[int, DivisorCountTable] = {}
_TAU_ENVELOPE_EXPONENT = 0.3


def _tau_table(limit: int) -> DivisorCountTable:
    if limit not in _TAU_CACHE:
        _TAU_CACHE[limit] = build_divisor_counts(limit)
    return _TAU_CACHE[limit]


def tau_envelope_constant(tau: DivisorCountTable) -> float:
    """Fitted C with tau(j) <= C j^0.3 on the table range (heuristic beyond)."""
    j = np.arange(1, tau.limit + 1, dtype=np.float64)
    return float(np.max(tau.counts[1:] / j**_TAU_ENVELOPE_EXPONENT))


def lq_tail_bound(q: float, n: int, coeff_cutoff: int, table: MobiusTable) -> float:
    """Bound on the l^q mass of the residual coefficients beyond the cutoff.

    The residual coefficient at degree j > n is (s_n - D_j(n))/j with
    |D_j(n)| <= tau(j), where s_n is the Möbius partial sum and D_j(n) the
    divisor sum cut at n.  Divisor counts are taken from a table up to
    2 * coeff_cutoff and replaced by the fitted envelope C j^0.3 beyond;
    for q <= 10/7 the envelope integral diverges and the bound is +inf.
    """
    if q <= 1.0:
        raise ValueError("q must be > 1")
    tau = _tau_table(2 * coeff_cutoff)
    s_n = abs(mobius_sum_over_k(table, n))
    j = np.arange(coeff_cutoff + 1, tau.limit + 1, dtype=np.float64)
    head = float(np.sum(((s_n + tau.counts[coeff_cutoff + 1 :]) / j) ** q))
    t = float(tau.limit)
    b1 = s_n * (t ** (1.0 - q) / (q - 1.0)) ** (1.0 / q)
    decay = (1.0 - _TAU_ENVELOPE_EXPONENT) * q
    if decay > 1.0:
        c_fit = tau_envelope_constant(tau)
        b2 = c_fit * (t ** (1.0 - decay) / (decay - 1.0)) ** (1.0 / q)
    else:
        b2 = math.inf
    return (head + (b1 + b2) ** q) ** (1.0 / q)


def run_lq_convergence(
    q: float, n_list: Sequence[int], coeff_cutoff: int, table: MobiusTable
) -> list[ConvergenceRecord]:
    """l^q residual of the Möbius partial sums against 1 - z, per truncation n.

    The partial sum is advanced in place from one checkpoint to the next
    (increasing k), so a sweep over n costs one pass.  q must exceed 1;
    values at q >= 2 are covered by the same run.  Trends should be read
    across decades of n, not adjacent values: the Möbius fluctuations make
    pointwise monotonicity false.
    """
    if q <= 1.0:
        raise ValueError("q must be > 1")
    ns = _check_n_list(n_list, table, coeff_cutoff)
    acc = np.zeros(coeff_cutoff + 1, dtype=np.float64)
    inv = inverse_index(coeff_cutoff)
    target = np.zeros(coeff_cutoff + 1, dtype=np.float64)
    target[0] = 1.0
    target[1] = -1.0
    records: list[ConvergenceRecord] = []
    prev = 1
    t_mark = time.perf_counter()
    for n in ns:
        for k in range(prev + 1, n + 1):
            mu = int(table.values[k])
            if mu:
                accumulate_ims(acc, k, float(mu), inv)
        prev = n
        value = lq_norm(TruncatedSeries(acc - target), q)
        tail = lq_tail_bound(q, n, coeff_cutoff, table)
        now = time.perf_counter()
        records.append(
            ConvergenceRecord(
                n=n,
                norm_kind="lq",
                param=q,
                coeff_cutoff=coeff_cutoff,
                value=value,
                tail_bound=tail,
                wall_time_ms=int(round((now - t_mark) * 1000.0)),
            )
        )
        t_mark = now
    return records


def lq_residual_direct(q: float, n: int, coeff_cutoff: int, table: MobiusTable) -> float:
    """Residual norm recomputed from the closed-form coefficients.

    Independent of the accumulation path: the degree-j coefficient is
    assembled from the scalar Möbius partial sum and an exact integer
    divisor sieve, then the norm is taken in one shot.
    """
    if q <= 0:
        raise ValueError("q must be positive")
    if n < 2 or n > table.limit:
        raise ValueError("n out of range")
    d = np.zeros(coeff_cutoff + 1, dtype=np.int64)
    for k in range(2, n + 1):
        mu = int(table.values[k])
        if mu:
            d[k::k] += mu
    c_n = mobius_sum_over_k(table, n) - 1.0  # sum over k = 2..n
    res = np.empty(coeff_cutoff + 1, dtype=np.float64)
    res[0] = (
        math.fsum(
            -int(table.values[k]) * math.log(k) / k
            for k in range(2, n + 1)
            if table.values[k]
        )
        - 1.0
    )
    m = np.arange(1, coeff_cutoff + 1, dtype=np.float64)
    res[1:] = (c_n - d[1:]) / m
    res[1] += 1.0
    return lq_norm(TruncatedSeries(res), q)


def run_hp_convergence(
    p: float,
    n_list: Sequence[int],
    coeff_cutoff: int,
    nodes: int,
    table: MobiusTable,
) -> list[ConvergenceRecord]:
    """H^p quasi-norm of sum_{k=2..n} mu(k) h_k - 1 for 0 < p < 1.

    Each record's ``tail_bound`` column carries the quadrature refinement
    discrepancy |value at nodes - value at 2 nodes|: the truncation tail
    has no usable closed-form bound on the boundary, so the refinement
    control is the honest error indicator here.
    """
    if not 0.0 < p < 1.0:
        raise ValueError("p must lie in (0, 1)")
    ns = _check_n_list(n_list, table, coeff_cutoff)
    acc = np.zeros(coeff_cutoff + 1, dtype=np.float64)
    inv = inverse_index(coeff_cutoff)
    records: list[ConvergenceRecord] = []
    prev = 1
    t_mark = time.perf_counter()
    for n in ns:
        for k in range(prev + 1, n + 1):
            mu = int(table.values[k])
            if mu:
                accumulate_ims(acc, k, float(mu), inv)
        prev = n
        coeffs = np.cumsum(acc)
        coeffs[0] -= 1.0
        residual = TruncatedSeries(coeffs)
        # undersampling is expected at the default parameters; the refinement
        # column below is the operative quadrature control for these records
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", QuadratureWarning)
            value = hp_norm_estimate(residual, p, nodes)
            refined = hp_norm_estimate(residual, p, 2 * nodes)
        now = time.perf_counter()
        records.append(
            ConvergenceRecord(
                n=n,
                norm_kind="hp",
                param=p,
                coeff_cutoff=coeff_cutoff,
                value=value,
                tail_bound=abs(value - refined),
                wall_time_ms=int(round((now - t_mark) * 1000.0)),
            )
        )
        t_mark = now
    return records


def run_lambda_sweep(
    k_list: Iterable[int],
    s_grid: Iterable[complex],
    coeff_cutoff: int,
    slack: float = 1e-8,
) -> list[LambdaRecord]:
    """Residuals |Lambda^(s)(h_k) - G_k(s)| with pass flags against tail bounds.

    Grid points must satisfy Re(s) > 1/2 (the functionals are bounded on
    the underlying Hardy-Hilbert space only there) and s != 1 (pole).
    """
    grid = [complex(s) for s in s_grid]
    for s in grid:
        if s.real <= 0.5:
            raise DomainError(
                f"s = {s} rejected: the evaluation functionals are bounded on the "
                "Hardy-Hilbert space of the disk only for Re(s) > 1/2"
            )
        if abs(s - 1.0) < 1e-12:
            raise DomainError("s = 1 rejected: zeta pole")
    ks = [int(k) for k in k_list]
    if any(k < 2 for k in ks):
        raise ValueError("k values must be >= 2")
    records: list[LambdaRecord] = []
    for k in ks:
        h = hk_coeffs(k, coeff_cutoff)
        for s in grid:
            ev = lambda_apply(h, s)
            residual = abs(ev.value - g_k(k, s))
            records.append(
                LambdaRecord(
                    k=k,
                    s=s,
                    residual=residual,
                    tail_bound=ev.tail_bound,
                    passed=residual <= ev.tail_bound + slack,
                )
            )
    return records


def run_pointwise_approx(
    s_grid: Iterable[complex], n_list: Sequence[int], table: MobiusTable
) -> list[ApproxRecord]:
    """Residuals |sum_{k=2..n} mu(k) G_k(s) + 1/s| over the n sweep.

    Reporting only: convergence is not asserted for Re(s) <= 1.
    """
    grid = [complex(s) for s in s_grid]
    for s in grid:
        if s.real <= 0.5:
            raise DomainError(f"s = {s} rejected: need Re(s) > 1/2")
        if abs(s - 1.0) < 1e-12:
            raise DomainError("s = 1 rejected: zeta pole")
    ns = [int(n) for n in n_list]
    if not ns or any(n < 2 for n in ns):
        raise ValueError("n values must be >= 2")
    if max(ns) > table.limit:
        raise ValueError(f"max n = {max(ns)} exceeds table limit {table.limit}")
    records: list[ApproxRecord] = []
    for s in grid:
        target = lambda_on_constant(s)
        for n in ns:
            value = approx_reciprocal_s(n, s, table)
            records.append(ApproxRecord(s=s, n=n, residual=abs(value - target)))
    return records


# ----------------------------------------------------------------------------
# CSV output.  Floats are written with repr (shortest round-trip form), rows
# end with "\n", so identical records serialize to identical bytes.


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _write_rows(out: TextIO, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(x) for x in row])


def write_convergence_csv(records: Sequence[ConvergenceRecord], out: TextIO) -> None:
    _write_rows(
        out,
        ("n", "norm_kind", "param", "coeff_cutoff", "value", "tail_bound", "wall_time_ms"),
        (
            (r.n, r.norm_kind, r.param, r.coeff_cutoff, r.value, r.tail_bound, r.wall_time_ms)
            for r in records
        ),
    )


def write_lambda_csv(records: Sequence[LambdaRecord], out: TextIO) -> None:
    _write_rows(
        out,
        ("k", "s_re", "s_im", "residual", "tail_bound", "pass"),
        ((r.k, r.s.real, r.s.imag, r.residual, r.tail_bound, r.passed) for r in records),
    )


def write_approx_csv(records: Sequence[ApproxRecord], out: TextIO) -> None:
    _write_rows(
        out,
        ("s_re", "s_im", "n", "residual"),
        ((r.s.real, r.s.imag, r.n, r.residual) for r in records),
    )


def write_weights_csv(results: Sequence[ClassificationResult], out: TextIO) -> None:
    _write_rows(
        out,
        ("family", "params", "c4_r", "rm_bounded", "strip"),
        (
            (
                r.family.kind,
                r.family.params,
                r.c4_halfplane,
                r.easy_c3_bounded_rm,
                r.strip,
            )
            for r in results
        ),
    )


def write_probe_csv(result: ProbeResult, out: TextIO) -> None:
    cmin = result.cumulative_min()
    cmax = result.cumulative_max()
    _write_rows(
        out,
        ("i", "n", "ratio", "running_min", "running_max"),
        (
            (i + 1, int(result.indices[i]), float(result.ratios[i]), float(cmin[i]), float(cmax[i]))
            for i in range(result.indices.size)
        ),
    )


def write_manifest(manifest: ExperimentManifest, out: TextIO) -> None:
    payload = json.loads(manifest.canonical_json())
    payload["id"] = manifest.manifest_id
    out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
