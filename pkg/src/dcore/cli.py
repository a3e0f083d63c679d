"""Command-line interface: ``dcore <command> ...`` or ``python -m dcore``.

Exit codes: 0 ok, 1 verification/fit failure, 2 domain error,
3 infinite count from an explicitly chosen finite engine,
4 enumeration budget exceeded, 64 usage error.

Routing of ``--engine auto``:
  r <= d           closed binomial sum (s <= 0 uses the extension)
  r = ns - 1       the ns-1 closed formula
  gcd(s, r) > d    reported as infinite without search
  anything else    brute-force enumeration; cost grows exponentially in
                   the element bound, so a warning goes to stderr
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

import mpmath

from . import asymptotics as asy
from . import formulas as fm
from . import genfunc as gfm
from . import verify as vf
from .oracle import (INFINITE, BudgetExceeded, DomainError, EnumerationBudget,
                     count_oracle, enumerate_X, is_finite)
from .partitions import ProblemInstance

EXIT_OK, EXIT_FAIL, EXIT_DOMAIN, EXIT_INFINITE, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 3, 4, 64
ENGINES = ("auto", "oracle", "closed", "recurrence", "gf")


class InfiniteRequested(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class OutputRecord:
    d: int
    r: int
    s: int
    engine: str
    value: object  # int, INFINITE, "skipped", or float for asymptotic

    def rendered(self) -> str:
        return str(self.value)

    def to_dict(self) -> dict:
        return {"d": self.d, "r": self.r, "s": self.s, "engine": self.engine,
                "value": self.rendered()}


def _ns_minus_1(r: int, s: int):
    if s >= 1 and (r + 1) % s == 0 and (r + 1) // s >= 1:
        return (r + 1) // s
    return None


def evaluate(d: int, r: int, s: int, engine: str = "auto",
             budget: EnumerationBudget | None = None, warn=None) -> OutputRecord:
    """Compute N_{d,r}(s) with the requested engine."""
    budget = budget or EnumerationBudget.from_env()
    ProblemInstance(d, r, s)  # validates
    if engine == "auto":
        if r <= d:
            engine = "closed"
        elif not is_finite(d, r, s):
            return OutputRecord(d, r, s, "closed", INFINITE)
        elif _ns_minus_1(r, s) is not None:
            return OutputRecord(d, r, s, "closed", fm.n_ns_minus_1(d, _ns_minus_1(r, s), s))
        else:
            engine = "oracle"
            if warn:
                warn(f"warning: r > d and r != ns-1; enumerating N_{{{d},{r}}}({s}) by brute force")
    if engine == "oracle":
        if s >= 1 and not is_finite(d, r, s):
            raise InfiniteRequested(f"N_{{{d},{r}}}({s}) is infinite (gcd(s, r) > d)")
        return OutputRecord(d, r, s, engine, count_oracle(ProblemInstance(d, r, s), budget))
    if r > d:
        if engine == "closed" and _ns_minus_1(r, s) is not None:
            return OutputRecord(d, r, s, engine, fm.n_ns_minus_1(d, _ns_minus_1(r, s), s))
        if not is_finite(d, r, s):
            raise InfiniteRequested(f"N_{{{d},{r}}}({s}) is infinite (gcd(s, r) > d)")
        raise DomainError(f"engine {engine!r} needs r <= d (got r={r}, d={d})")
    if s <= 0:
        return OutputRecord(d, r, s, engine, fm.n_dr_extended(d, r, s))
    if engine == "closed":
        value = fm.n_dr_closed(d, r, s)
    elif engine == "recurrence":
        value = fm.n_dr_recurrence(d, r, s)
    elif engine == "gf":
        value = gfm.series_coeffs(gfm.gf_dr(d, r), s + 1)[s]
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return OutputRecord(d, r, s, engine, value)


def _emit_records(records, fmt, out, header=("d", "r", "s", "engine", "value")):
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        for rec in records:
            row = rec.to_dict()
            w.writerow([row[k] for k in header])
    else:
        for rec in records:
            out.write(json.dumps(rec.to_dict()) + "\n")


def parse_range(text: str, d: int | None = None) -> list[int]:
    """'3', '1..5', '1,3,7' or '1..d' (upper bound tied to the current d)."""
    out = []
    for piece in text.split(","):
        piece = piece.strip()
        if ".." in piece:
            lo, hi = piece.split("..", 1)
            lo_v = _range_bound(lo, d)
            hi_v = _range_bound(hi, d)
            out.extend(range(lo_v, hi_v + 1))
        else:
            out.append(_range_bound(piece, d))
    if not out:
        raise ValueError(f"empty range {text!r}")
    return out


def _range_bound(tok: str, d):
    tok = tok.strip()
    if tok == "d":
        if d is None:
            raise ValueError("'d' can only bound the r range")
        return d
    return int(tok)


def cmd_compute(args, out, err) -> int:
    try:
        rec = evaluate(args.d, args.r, args.s, args.engine, warn=lambda m: print(m, file=err))
    except InfiniteRequested as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INFINITE
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DOMAIN
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=err)
        return EXIT_BUDGET
    _emit_records([rec], args.format, out)
    return EXIT_OK


def cmd_table(args, out, err) -> int:
    try:
        ds = parse_range(args.d)
        ss = parse_range(args.s)
        grid = [(d, r, s) for d in ds for r in parse_range(args.r, d) for s in ss]
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    records, status, warned = [], EXIT_OK, []
    for d, r, s in grid:
        try:
            rec = evaluate(d, r, s, "auto", warn=warned.append)
        except BudgetExceeded:
            rec, status = OutputRecord(d, r, s, "oracle", "skipped"), EXIT_BUDGET
        except (DomainError, ValueError) as exc:
            print(f"error: ({d},{r},{s}): {exc}", file=err)
            return EXIT_DOMAIN
        records.append(rec)
    if warned:
        print(f"warning: {len(warned)} entries routed to brute-force enumeration", file=err)
    _emit_records(records, args.format, out, header=("d", "r", "s", "value"))
    return status


def cmd_enumerate(args, out, err) -> int:
    try:
        inst = ProblemInstance(args.d, args.r, args.s)
        if args.s >= 1 and not is_finite(args.d, args.r, args.s):
            print("error: infinitely many sets (gcd(s, r) > d)", file=err)
            return EXIT_INFINITE
        sets = enumerate_X(inst, EnumerationBudget.from_env())
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=err)
        return EXIT_BUDGET
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DOMAIN
    for b in sets:
        out.write(json.dumps(list(b)) + "\n")
    return EXIT_OK


def cmd_verify(args, out, err) -> int:
    limits = {"dmax": args.dmax, "smax": args.smax, "nmax": args.nmax, "d": args.d_single}
    checks = vf.run_suite(args.suite, **limits)
    for c in checks:
        if args.format == "json":
            row = {"status": "info" if c.info else ("pass" if c.passed else "fail"),
                   "name": c.name, "cases": c.cases, "counterexample": c.counterexample,
                   **{k: v for k, v in c.details.items()}}
            out.write(json.dumps(row) + "\n")
        else:
            out.write(c.line() + "\n")
    ok = vf.all_passed(checks)
    if args.format != "json":
        out.write(("ALL PASS" if ok else "SOME CHECKS FAILED") + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_asymptote(args, out, err) -> int:
    try:
        if args.family == "r":
            r = args.r if args.r is not None else 1
            model = asy.model_r(args.d, r, args.check_s)
            report = model.to_dict()
            report["K_printed_over_K"] = mpmath.nstr(asy.printed_constant(args.d, r) / model.K, 20)
        else:
            if args.n is None:
                raise DomainError("--family needs -n")
            sign = 1 if args.family == "ns+c" else -1
            c = 1 if args.family == "ns-1" else (args.c or 1)
            if not 1 <= c <= args.d:
                raise DomainError(f"need 1 <= c <= d, got c={c}")
            report = asy.model_family(args.d, args.n, sign, c).to_dict()
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DOMAIN
    out.write(json.dumps(report) + "\n")
    return EXIT_OK


def cmd_gf(args, out, err) -> int:
    try:
        if args.family == "r":
            r = args.r if args.r is not None else 1
            g = gfm.gf_dr_unreduced(args.d, r) if args.unreduced else gfm.gf_dr(args.d, r)
        else:
            if args.n is None:
                raise DomainError("--family needs -n")
            sign = 1 if args.family == "ns+c" else -1
            c = 1 if args.family == "ns-1" else (args.c or 1)
            g = gfm.fit_family(args.d, args.n, sign, c).gf
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DOMAIN
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=err)
        return EXIT_BUDGET
    out.write(g.to_json() + "\n")
    return EXIT_OK


def cmd_fit(args, out, err) -> int:
    sign = 1 if args.sign == "+" else -1
    try:
        f = gfm.fit_family(args.d, args.n, sign, args.c, holdout=args.holdout)
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DOMAIN
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=err)
        return EXIT_BUDGET
    report = {"d": f.d, "n": f.n, "sign": args.sign, "c": f.c, **f.gf.to_dict(),
              "train": [str(v) for v in f.train], "holdout": [str(v) for v in f.holdout],
              "holdout_ok": f.holdout_ok}
    out.write(json.dumps(report) + "\n")
    return EXIT_OK if f.holdout_ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dcore", description=__doc__,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, default="json"):
        sp.add_argument("--format", choices=("csv", "json"), default=default)

    c = sub.add_parser("compute", help="N_{d,r}(s) from one engine")
    c.add_argument("-d", type=int, required=True)
    c.add_argument("-r", type=int, required=True)
    c.add_argument("-s", type=int, required=True)
    c.add_argument("--engine", choices=ENGINES, default="auto")
    fmt(c)
    c.set_defaults(func=cmd_compute)

    t = sub.add_parser("table", help="grid of values from the auto engine")
    t.add_argument("-d", "--d", dest="d", required=True, help="e.g. 1..4")
    t.add_argument("-r", "--r", dest="r", required=True, help="e.g. 1..d")
    t.add_argument("-s", "--s", dest="s", required=True, help="e.g. 1..20")
    fmt(t, "csv")
    t.set_defaults(func=cmd_table)

    e = sub.add_parser("enumerate", help="list the beta-sets in X_{d,r,s}")
    e.add_argument("-d", type=int, required=True)
    e.add_argument("-r", type=int, required=True)
    e.add_argument("-s", type=int, required=True)
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="run cross-validation suites")
    v.add_argument("--suite", choices=vf.SUITES + ("all",), default="all")
    v.add_argument("--dmax", type=int)
    v.add_argument("--smax", type=int)
    v.add_argument("--nmax", type=int)
    v.add_argument("--d", dest="d_single", type=int, help="single d for the asym suite")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_verify)

    for name, helptext, func in (("asymptote", "growth root and prefactor", cmd_asymptote),
                                 ("gf", "rational generating function as JSON", cmd_gf)):
        a = sub.add_parser(name, help=helptext)
        a.add_argument("-d", type=int, required=True)
        a.add_argument("-r", type=int)
        a.add_argument("--family", choices=("r", "ns-1", "ns+c", "ns-c"), default="r")
        a.add_argument("-n", type=int)
        a.add_argument("-c", type=int)
        if name == "asymptote":
            a.add_argument("--check-s", type=int, default=500)
        else:
            a.add_argument("--unreduced", action="store_true")
        a.set_defaults(func=func)

    f = sub.add_parser("fit", help="fit a family numerator from oracle terms")
    f.add_argument("-d", type=int, required=True)
    f.add_argument("-n", type=int, required=True)
    f.add_argument("-c", type=int, default=1)
    f.add_argument("--sign", choices=("+", "-"), default="-")
    f.add_argument("--holdout", type=int, default=5)
    f.set_defaults(func=cmd_fit)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return args.func(args, out, err)


def run(argv) -> tuple[int, str, str]:
    """Invoke the CLI in-process; returns (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())
