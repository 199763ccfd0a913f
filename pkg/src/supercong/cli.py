"""Command-line front end.

Subcommands::

    verify   run one check at a point or over a (p, r) grid
    gamma    evaluate Gamma_p(x) mod p^k
    series   evaluate the cubic/quintic weighted sums and finite right-hand sums
    lemma    run a lemma check (2.1 ... 3.2)
    scan     every congruence check over the default grid

Exit codes: 0 all good, 1 a mathematical failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
from fractions import Fraction

from sympy import isprime

from .checks import (
    REGISTRY,
    CheckId,
    CongruenceReport,
    Status,
    admissible_r,
    render_valuation,
    run_check,
    run_grid,
)
from .errors import SupercongError
from .gamma import gamma_at
from .padic import context_new
from .series import finite_rhs_sum, weighted_sum_6, weighted_sum_10

CSV_COLUMNS = ["check", "p", "r", "precision", "diff_valuation", "status", "lhs", "rhs"]

SCAN_IDS = [
    CheckId.VAN_HAMME_D2,
    CheckId.LR_11,
    CheckId.LR_11_MOD_P7_FAILURE,
    CheckId.GS_12,
    CheckId.LIU_13,
    CheckId.GLS_INLINE_P5,
    CheckId.THM_1_1,
    CheckId.THM_1_2,
    CheckId.THM_1_2_R1_COROLLARY,
    CheckId.CONJ_4_1,
]

LEMMA_ALIASES = {
    "2.1": CheckId.LEMMA_2_1,
    "2.2": CheckId.LEMMA_2_2,
    "2.3": CheckId.LEMMA_2_3,
    "2.4": CheckId.LEMMA_2_4,
    "2.5": CheckId.LEMMA_2_5,
    "2.6": CheckId.LEMMA_2_6,
    "2.7": CheckId.LEMMA_2_7,
    "3.1": CheckId.LEMMA_3_1,
    "3.2": CheckId.LEMMA_3_2,
}


class UsageError(Exception):
    pass


def _default_seed() -> int:
    raw = os.environ.get("SUPERCONG_SEED")
    if raw is None or raw == "":
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"SUPERCONG_SEED must be an integer, got {raw!r}") from None


# ----------------------------------------------------------------------------
# Rendering


def stable_payload(reports: list[CongruenceReport]) -> str:
    return json.dumps([r.to_dict(timing=False) for r in reports], sort_keys=True)


def digest(reports: list[CongruenceReport]) -> str:
    return hashlib.sha256(stable_payload(reports).encode()).hexdigest()


def format_reports(reports: list[CongruenceReport], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for rep in reports:
            d = rep.to_dict(timing=False)
            w.writerow(["" if d[c] is None else d[c] for c in CSV_COLUMNS])
        return buf.getvalue()
    lines = []
    for rep in reports:
        v = render_valuation(rep.diff_valuation)
        prec = "exact" if rep.precision is None else rep.precision
        line = f"{rep.status.value:<17} {rep.check:<22} p={rep.p} r={rep.r} prec={prec} v={v}"
        if rep.reason:
            line += f"  ({rep.reason})"
        lines.append(line)
    counts = {s: sum(r.status is s for r in reports) for s in Status}
    lines.append("summary: " + ", ".join(f"{n} {s.value}" for s, n in counts.items() if n))
    lines.append(f"digest: {digest(reports)}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _exit_code(reports) -> int:
    return 1 if any(r.failed for r in reports) else 0


# ----------------------------------------------------------------------------
# Running checks from flags


def _collect(cid: CheckId, args, default_pmax: int | None = None) -> list[CongruenceReport]:
    spec = REGISTRY[cid]
    seed = args.seed if args.seed is not None else _default_seed()
    kw = dict(precision=args.prec, seed=seed, trials=getattr(args, "trials", None))
    if args.r is not None and args.rmin is not None:
        raise UsageError("--r and --rmin are mutually exclusive")
    if args.r is not None and args.r > 1 or args.rmin is not None and args.rmin > 1:
        raise UsageError("r must be <= 1")

    if cid is CheckId.LR_11_MOD_P7_FAILURE:
        bound = args.p or args.pmax or default_pmax or 37
        return [run_check(cid, bound, None, **{k: v for k, v in kw.items() if k != "trials"})]

    if spec.r_family is None:
        rs = [None]
    elif args.r is not None:
        rs = [args.r]
    else:
        lo = args.rmin if args.rmin is not None else -9
        rs = [r for r in range(lo, 2) if admissible_r(spec.r_family, r)]

    if not spec.uses_p:
        return [run_check(cid, None, r, **kw) for r in rs]

    if args.p is not None:
        if not isprime(args.p):
            raise UsageError(f"--p {args.p} is not prime")
        return [run_check(cid, args.p, r, **kw) for r in rs]

    p_max = args.pmax or default_pmax
    if p_max is None:
        raise UsageError(f"{cid.value} needs --p or --pmax")
    lo = min(rs) if rs != [None] else 1
    reports = run_grid(cid, p_max, lo, jobs=args.jobs, **kw)
    if args.r is not None:
        reports = [rep for rep in reports if rep.r == args.r]
    return reports


def cmd_verify(args) -> int:
    if not args.id:
        raise UsageError("--id is required")
    try:
        cid = CheckId.parse(args.id)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    reports = _collect(cid, args)
    _emit(format_reports(reports, args.format), args.out)
    return _exit_code(reports)


def cmd_lemma(args) -> int:
    if not args.id:
        raise UsageError("--id is required")
    key = args.id
    cid = LEMMA_ALIASES.get(key)
    if cid is None:
        try:
            cid = CheckId.parse(key if key.startswith("lemma_") else f"lemma_{key.replace('.', '_')}")
        except KeyError:
            raise UsageError(f"unknown lemma {key!r}; choose from {', '.join(LEMMA_ALIASES)}") from None
    if args.trials is not None and args.trials < 1:
        raise UsageError("--trials must be >= 1")
    reports = _collect(cid, args, default_pmax=61)
    _emit(format_reports(reports, args.format), args.out)
    return _exit_code(reports)


def cmd_scan(args) -> int:
    reports = []
    for cid in SCAN_IDS:
        spec = REGISTRY[cid]
        default = 37 if (spec.precision or 0) >= 6 else 61
        sub = argparse.Namespace(**vars(args))
        sub.p, sub.r = None, None
        sub.pmax = args.pmax or default
        sub.rmin = args.rmin if args.rmin is not None else -9
        reports += _collect(cid, sub)
    _emit(format_reports(reports, args.format), args.out)
    return _exit_code(reports)


def _parse_x(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse --x {text!r} as a rational") from None


def cmd_gamma(args) -> int:
    if args.p is None or args.x is None:
        raise UsageError("gamma needs --p and --x")
    k = args.prec if args.prec is not None else 1
    ctx = context_new(args.p, k)
    x = _parse_x(args.x)
    if x.denominator % args.p == 0:
        raise UsageError(f"{args.p} divides the denominator of {x}")
    val = gamma_at(ctx, x)
    refl = val * gamma_at(ctx, 1 - x)
    sign = "+1" if refl == 1 else "-1" if refl == -1 else str(refl)
    if args.format == "json":
        payload = {"p": args.p, "precision": k, "x": str(x), "value": int(val), "reflection": sign}
        _emit(json.dumps(payload) + "\n", args.out)
    else:
        _emit(f"{int(val)}\nreflection: Gamma_p({x}) * Gamma_p({1 - x}) = {sign}\n", args.out)
    return 0


def cmd_series(args) -> int:
    if args.r is None:
        raise UsageError("series needs --r")
    family = args.family
    if args.p is None:
        if args.upper is None:
            raise UsageError("exact evaluation needs --upper")
        ring = Fraction
        upper = args.upper
    else:
        k = args.prec if args.prec is not None else (6 if family == "cubic" else 5)
        ring = context_new(args.p, k)
        upper = args.upper if args.upper is not None else args.p - 1
    wsum = (weighted_sum_6 if family == "cubic" else weighted_sum_10)(ring, args.r, upper)
    rhs = finite_rhs_sum(ring, family, args.r)
    if args.format == "json":
        payload = {"family": family, "r": args.r, "p": args.p, "upper": upper,
                   "weighted_sum": str(wsum), "finite_rhs_sum": str(rhs)}
        _emit(json.dumps(payload) + "\n", args.out)
    else:
        _emit(f"weighted_sum: {wsum}\nfinite_rhs_sum: {rhs}\n", args.out)
    return 0


# ----------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="supercong", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, grid: bool = True) -> None:
        p.add_argument("--p", type=int, help="a single prime")
        if grid:
            p.add_argument("--pmax", type=int, help="scan primes up to this bound")
            p.add_argument("--rmin", type=int, help="scan r in [rmin, 1]")
            p.add_argument("--jobs", type=int, default=1, help="worker processes for grids")
            p.add_argument("--seed", type=int, help="seed (default: $SUPERCONG_SEED or 0)")
        p.add_argument("--r", type=int)
        p.add_argument("--prec", type=int, help="override the modulus exponent")
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")
        p.add_argument("--out", help="write to this path instead of stdout")

    v = sub.add_parser("verify", help="run one check")
    v.add_argument("--id", required=False)
    v.add_argument("--trials", type=int)
    common(v)
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gamma", help="evaluate Gamma_p(x) mod p^k")
    g.add_argument("--x", help="rational argument a/b")
    common(g, grid=False)
    g.set_defaults(func=cmd_gamma)

    s = sub.add_parser("series", help="evaluate the weighted and finite sums")
    s.add_argument("--family", choices=["cubic", "quintic"], default="cubic")
    s.add_argument("--upper", type=int, help="last summation index (default p - 1)")
    common(s, grid=False)
    s.set_defaults(func=cmd_series)

    lm = sub.add_parser("lemma", help="run a lemma check")
    lm.add_argument("--id", required=False, help="2.1 ... 2.7, 3.1, 3.2")
    lm.add_argument("--trials", type=int, help="sample count for seeded lemmas")
    common(lm)
    lm.set_defaults(func=cmd_lemma)

    sc = sub.add_parser("scan", help="all congruence checks over the default grid")
    common(sc)
    sc.set_defaults(func=cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if getattr(args, "jobs", 1) is not None and getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UsageError, SupercongError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
