"""Command-line interface.

One binary, ``zfhp``, with subcommands for the convergence experiments,
the functional identity sweep, the pointwise approximation of -1/s, weight
classification, Mellin verification and zeta evaluation.  Results are
emitted as CSV (stdout, or ``--out FILE`` plus a ``*.manifest.json``
sidecar that reproduces the run).

Exit codes: 0 success, 2 invalid arguments, 3 domain error (pole or
half-plane violation), 4 check failed in ``--check`` mode.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager
from pathlib import Path

from .arith import build_mobius
from .errors import ConditioningError, DomainError
from .experiments import (
    build_manifest,
    run_hp_convergence,
    run_lambda_sweep,
    run_lq_convergence,
    run_pointwise_approx,
    write_approx_csv,
    write_convergence_csv,
    write_lambda_csv,
    write_manifest,
    write_probe_csv,
    write_weights_csv,
)
from .special import f_k, mellin_step_pk, zeta
from .weights import (
    TABLE_FAMILIES,
    all_integers,
    arithmetic_progression,
    classify,
    extremal_probe,
    parse_weight_family,
    prime_indices,
)

CHECK_FAILED = 4


def parse_complex(text: str) -> complex:
    try:
        return complex(text.strip().replace("i", "j"))
    except ValueError:
        raise ValueError(f"cannot parse complex number from {text!r}") from None


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ValueError(f"cannot parse integer list from {text!r}") from None


def parse_int_range(text: str) -> list[int]:
    """Accepts ``2..10`` (inclusive) or a comma list ``2,3,5``."""
    text = text.strip()
    if ".." in text:
        lo_text, _, hi_text = text.partition("..")
        lo, hi = int(lo_text), int(hi_text)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return parse_int_list(text)


def parse_s_grid(text: str) -> list[complex]:
    """``"0.6,0.75,1.5,2 x 0,1,5"`` -> cartesian grid, real part varying slowest."""
    re_text, sep, im_text = text.partition("x")
    if not sep:
        raise ValueError("s-grid must look like 'RE,RE,... x IM,IM,...'")
    res = [float(p) for p in re_text.split(",") if p.strip()]
    ims = [float(p) for p in im_text.split(",") if p.strip()]
    if not res or not ims:
        raise ValueError("s-grid needs at least one real and one imaginary part")
    return [complex(re, im) for re in res for im in ims]


def _subsequence(text: str):
    text = text.strip().lower()
    if text == "all":
        return all_integers()
    if text == "primes":
        return prime_indices()
    if text.startswith("arith:"):
        start_text, _, step_text = text[len("arith:") :].partition(",")
        return arithmetic_progression(int(start_text), int(step_text))
    raise ValueError(f"unknown subsequence {text!r} (want all | primes | arith:START,STEP)")


@contextmanager
def _open_out(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            yield handle


def _emit(path: str | None, writer, records, manifest=None) -> None:
    with _open_out(path) as out:
        writer(records, out)
    if path is not None and manifest is not None:
        sidecar = Path(path).with_suffix(".manifest.json")
        with open(sidecar, "w", encoding="utf-8") as out:
            write_manifest(manifest, out)


def _cmd_convergence(args: argparse.Namespace) -> int:
    n_list = parse_int_list(args.n)
    mobius_limit = args.mobius_limit if args.mobius_limit else max(n_list)
    table = build_mobius(mobius_limit)
    if args.space == "lq":
        if args.q is None:
            raise ValueError("--q is required for --space lq")
        records = run_lq_convergence(args.q, n_list, args.coeff_cutoff, table)
        manifest = build_manifest(
            "lq_convergence",
            q=args.q,
            n_list=n_list,
            coeff_cutoff=args.coeff_cutoff,
            mobius_limit=mobius_limit,
        )
    else:
        if args.p is None:
            raise ValueError("--p is required for --space hp")
        records = run_hp_convergence(args.p, n_list, args.coeff_cutoff, args.nodes, table)
        manifest = build_manifest(
            "hp_convergence",
            p=args.p,
            n_list=n_list,
            coeff_cutoff=args.coeff_cutoff,
            nodes=args.nodes,
            mobius_limit=mobius_limit,
        )
    _emit(args.out, write_convergence_csv, records, manifest)
    if args.check:
        values = [r.value for r in records]
        if any(b >= a for a, b in zip(values, values[1:])):
            print("check failed: values are not strictly decreasing", file=sys.stderr)
            return CHECK_FAILED
    return 0


def _cmd_lambda(args: argparse.Namespace) -> int:
    k_list = parse_int_range(args.k)
    grid = parse_s_grid(args.s_grid)
    records = run_lambda_sweep(k_list, grid, args.coeff_cutoff)
    manifest = build_manifest(
        "lambda_sweep",
        k_list=k_list,
        s_grid=[[s.real, s.imag] for s in grid],
        coeff_cutoff=args.coeff_cutoff,
    )
    _emit(args.out, write_lambda_csv, records, manifest)
    if args.check and not all(r.passed for r in records):
        bad = [r for r in records if not r.passed]
        print(f"check failed: {len(bad)} of {len(records)} residuals above bound", file=sys.stderr)
        return CHECK_FAILED
    return 0


def _cmd_approx(args: argparse.Namespace) -> int:
    s = parse_complex(args.s)
    n_list = parse_int_list(args.n)
    mobius_limit = args.mobius_limit if args.mobius_limit else max(n_list)
    table = build_mobius(mobius_limit)
    records = run_pointwise_approx([s], n_list, table)
    manifest = build_manifest(
        "pointwise_approx",
        s_grid=[[s.real, s.imag]],
        n_list=n_list,
        mobius_limit=mobius_limit,
    )
    _emit(args.out, write_approx_csv, records, manifest)
    return 0


def _cmd_weights_classify(args: argparse.Namespace) -> int:
    family = parse_weight_family(args.family)
    _emit(args.out, write_weights_csv, [classify(family)])
    return 0


_EXPECTED_STRIPS = ("Right", "Right", "Right", "None", "None", "Left", "Left")


def _cmd_weights_table1(args: argparse.Namespace) -> int:
    results = [classify(fam) for fam in TABLE_FAMILIES]
    _emit(args.out, write_weights_csv, results)
    if args.check:
        strips = tuple(r.strip for r in results)
        if strips != _EXPECTED_STRIPS:
            print(f"check failed: strips {strips} != {_EXPECTED_STRIPS}", file=sys.stderr)
            return CHECK_FAILED
    return 0


def _cmd_weights_probe(args: argparse.Namespace) -> int:
    family = parse_weight_family(args.family)
    result = extremal_probe(family, args.r, _subsequence(args.subsequence), args.count)
    if args.out:
        _emit(args.out, write_probe_csv, result)
    print(
        f"family={family.label} r={args.r:g} count={args.count} "
        f"running_min={result.running_min!r} running_max={result.running_max!r}"
    )
    return 0


def _cmd_mellin_verify(args: argparse.Namespace) -> int:
    k_list = parse_int_range(args.k)
    s = parse_complex(args.s)
    failures = 0
    with _open_out(args.out) as out:
        out.write("k,s_re,s_im,abs_err,ok\n")
        for k in k_list:
            err = abs(mellin_step_pk(k, s) - f_k(k, s))
            ok = err <= args.tol
            failures += not ok
            out.write(f"{k},{s.real!r},{s.imag!r},{err!r},{'true' if ok else 'false'}\n")
    if args.check and failures:
        print(f"check failed: {failures} of {len(k_list)} beyond tol={args.tol:g}", file=sys.stderr)
        return CHECK_FAILED
    return 0


def _cmd_zeta(args: argparse.Namespace) -> int:
    result = zeta(parse_complex(args.s))
    value = result.value
    print(f"zeta({args.s}) = {value.real!r} + {value.imag!r}i  [{result.method}, {result.terms_used} terms]")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zfhp",
        description="Numerical experiments around zero-free half-plane criteria",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    conv = sub.add_parser("convergence", help="Möbius partial-sum convergence experiments")
    conv.add_argument("--space", choices=("lq", "hp"), required=True)
    conv.add_argument("--q", type=float, help="l^q exponent (space lq; q > 1)")
    conv.add_argument("--p", type=float, help="H^p exponent (space hp; 0 < p < 1)")
    conv.add_argument("--n", required=True, help="comma list of truncations, e.g. 10,100,1000")
    conv.add_argument("--coeff-cutoff", type=int, default=100_000)
    conv.add_argument("--mobius-limit", type=int, default=0, help="default: max of --n")
    conv.add_argument("--nodes", type=int, default=8192, help="quadrature nodes (space hp)")
    conv.add_argument("--out", help="CSV output path (stdout if omitted)")
    conv.add_argument("--check", action="store_true", help="exit 4 unless values strictly decrease")
    conv.set_defaults(func=_cmd_convergence)

    lam = sub.add_parser("lambda", help="residuals of the functional identity on h_k")
    lam.add_argument("--k", required=True, help="range 2..10 or comma list")
    lam.add_argument("--s-grid", required=True, help='grid "0.6,0.75 x 0,1,5"')
    lam.add_argument("--coeff-cutoff", type=int, default=100_000)
    lam.add_argument("--out", help="CSV output path (stdout if omitted)")
    lam.add_argument("--check", action="store_true", help="exit 4 unless every residual passes")
    lam.set_defaults(func=_cmd_lambda)

    approx = sub.add_parser("approx", help="pointwise approximation of -1/s")
    approx.add_argument("--s", required=True, help="complex point, e.g. 2+0i")
    approx.add_argument("--n", required=True, help="comma list of truncations")
    approx.add_argument("--mobius-limit", type=int, default=0, help="default: max of --n")
    approx.add_argument("--out", help="CSV output path (stdout if omitted)")
    approx.set_defaults(func=_cmd_approx)

    weights = sub.add_parser("weights", help="weight-family diagnostics")
    wsub = weights.add_subparsers(dest="weights_command", required=True)

    wclassify = wsub.add_parser("classify", help="classify one family")
    wclassify.add_argument("--family", required=True, help="e.g. power:0.25")
    wclassify.add_argument("--out", help="CSV output path (stdout if omitted)")
    wclassify.set_defaults(func=_cmd_weights_classify)

    wtable = wsub.add_parser("table1", help="classify one representative of every kind")
    wtable.add_argument("--out", help="CSV output path (stdout if omitted)")
    wtable.add_argument("--check", action="store_true", help="exit 4 unless strips match")
    wtable.set_defaults(func=_cmd_weights_table1)

    wprobe = wsub.add_parser("probe", help="extremal ratio trace w_n / n^(r - 1/2)")
    wprobe.add_argument("--family", required=True)
    wprobe.add_argument("--r", type=float, required=True, help="exponent in (1/2, 1)")
    wprobe.add_argument("--subsequence", default="all", help="all | primes | arith:START,STEP")
    wprobe.add_argument("--count", type=int, default=10_000)
    wprobe.add_argument("--out", help="CSV trace path (summary always printed)")
    wprobe.set_defaults(func=_cmd_weights_probe)

    mellin = sub.add_parser("mellin", help="Mellin transform verification")
    msub = mellin.add_subparsers(dest="mellin_command", required=True)
    mverify = msub.add_parser("verify", help="quadrature of the step transforms against f_k")
    mverify.add_argument("--k", required=True, help="range 1..10 or comma list")
    mverify.add_argument("--s", required=True, help="complex point, e.g. 2+1i")
    mverify.add_argument("--tol", type=float, default=1e-8)
    mverify.add_argument("--out", help="CSV output path (stdout if omitted)")
    mverify.add_argument("--check", action="store_true", help="exit 4 on any mismatch")
    mverify.set_defaults(func=_cmd_mellin_verify)

    zeta_cmd = sub.add_parser("zeta", help="evaluate zeta on Re(s) > 0")
    zeta_cmd.add_argument("--s", required=True, help="complex point, e.g. 2+0i")
    zeta_cmd.set_defaults(func=_cmd_zeta)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3
    except ConditioningError as exc:
        print(f"conditioning error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"invalid arguments: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
