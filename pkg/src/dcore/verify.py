"""Cross-validation suites: every computation path checked against the others.

Each check yields a Check; a suite passes when every non-informational
check passes.  Output contains no timings so it is reproducible byte for
byte.
"""
from __future__ import annotations

import inspect
from dataclasses import dataclass, field

import mpmath

from . import asymptotics as asy
from . import formulas as fm
from . import genfunc as gfm
from .compositions import composition_gf, count_compositions
from .oracle import count_oracle, enumerate_X_naive
from .partitions import ProblemInstance

SUITES = ("rle", "ns1", "gf", "asym", "comp")


@dataclass
class Check:
    name: str
    passed: bool
    cases: int = 0
    counterexample: str = ""
    info: bool = False
    details: dict = field(default_factory=dict)

    def line(self) -> str:
        tag = "INFO" if self.info else ("PASS" if self.passed else "FAIL")
        out = f"{tag} {self.name} ({self.cases} cases)"
        if self.counterexample:
            out += f": first counterexample {self.counterexample}"
        for k, v in self.details.items():
            out += f" {k}={v}"
        return out


def _compare(name, cases, left, right, label=lambda c: str(c), info=False) -> Check:
    """Check left(c) == right(c) for every case; record the first mismatch."""
    n = 0
    for c in cases:
        n += 1
        a, b = left(c), right(c)
        if a != b:
            return Check(name, False, n, f"{label(c)} -> {a} != {b}", info=info)
    return Check(name, True, n, info=info)


def _dr_cases(dmax, smax):
    return [(d, r, s) for d in range(1, dmax + 1) for r in range(1, d + 1)
            for s in range(1, smax + 1)]


def _lbl(c):
    return "(" + ",".join(map(str, c)) + ")"


def suite_rle(dmax: int = 4, smax: int = 18) -> list[Check]:
    cases = _dr_cases(dmax, smax)
    oracle = {c: count_oracle(ProblemInstance(*c)) for c in cases}
    seqs = {(d, r): gfm.series_coeffs(gfm.gf_dr(d, r), smax + 1)
            for d in range(1, dmax + 1) for r in range(1, d + 1)}
    out = [
        _compare("closed == oracle", cases, lambda c: fm.n_dr_closed(*c), oracle.get, _lbl),
        _compare("r_reduction == oracle", cases, lambda c: fm.r_reduction(*c), oracle.get, _lbl),
        _compare("recurrence == oracle", cases, lambda c: fm.n_dr_recurrence(*c), oracle.get, _lbl),
        _compare("gf coefficient == oracle", cases, lambda c: seqs[c[:2]][c[2]], oracle.get, _lbl),
    ]
    branch = [(d, s) for d in range(1, max(dmax, 6) + 1) for s in range(1, d + 2)]
    out.append(_compare("N_{d,1}(s) == s for s <= d+1", branch,
                        lambda c: fm.n_d1_closed(*c), lambda c: c[1], _lbl))
    top = [(d, r) for d in range(1, max(dmax, 6) + 1) for r in range(1, d + 1)]
    out.append(_compare("N_{d,r}(d+1) == d+r", top,
                        lambda c: fm.n_dr_recurrence(c[0], c[1], c[0] + 1),
                        lambda c: c[0] + c[1], _lbl))
    ext = [(d, r, s) for d in range(1, dmax + 1) for r in range(1, d + 1)
           for s in range(-3, 1)]
    out.append(_compare("extension s <= 0 == naive sweep", ext,
                        lambda c: fm.n_dr_extended(*c),
                        lambda c: len(enumerate_X_naive(ProblemInstance(*c))), _lbl))
    fib = [1, 1]
    while len(fib) < 42:
        fib.append(fib[-1] + fib[-2])
    out.append(_compare("N_{1,1}(s) == F_{s+1}", range(1, 41),
                        lambda s: fm.n_d1_closed(1, s), lambda s: fib[s], str))
    return out


def suite_ns1(dmax: int = 3, nmax: int = 2, smax: int = 10) -> list[Check]:
    cases = [(d, n, s) for d in range(1, dmax + 1) for n in range(1, nmax + 1)
             for s in range(1, smax + 1) if n * s - 1 >= 1]
    oracle = {c: count_oracle(ProblemInstance(c[0], c[1] * c[2] - 1, c[2])) for c in cases}
    out = [_compare("ns-1 formula == oracle", cases,
                    lambda c: fm.n_ns_minus_1(*c), oracle.get, _lbl)]
    bad = [c for c in cases if fm.n_ns_minus_1_printed(*c) != oracle[c]]
    note = Check("ns-1 transcribed five-part sum vs oracle", not bad, len(cases), info=True)
    if bad:
        c = bad[0]
        note.counterexample = f"{_lbl(c)} -> {fm.n_ns_minus_1_printed(*c)} != {oracle[c]}"
        note.details["mismatches"] = len(bad)
    out.append(note)
    bcases = [(d, n, t) for d in range(1, 5) for n in range(1, 4) for t in range(1, 61)]
    out.append(_compare("B(t-1) + (n+1)B(t-d-1) == B(t)", bcases,
                        lambda c: fm.b_dn(c[0], c[1], c[2] - 1)
                        + (c[1] + 1) * fm.b_dn(c[0], c[1], c[2] - c[0] - 1),
                        lambda c: fm.b_dn(*c), _lbl))
    rcases = [(d, n, s) for d in range(1, dmax + 1) for n in range(1, nmax + 1)
              for s in range(3 * d + 2, 3 * d + 13)]
    out.append(_compare("ns-1 recurrence", rcases,
                        lambda c: fm.n_ns_minus_1_recurrence(*c),
                        lambda c: fm.n_ns_minus_1(*c), _lbl))
    ocases = [c for c in rcases if c[2] <= 3 * c[0] + 7]
    out.append(_compare("ns-1 recurrence == oracle", ocases,
                        lambda c: fm.n_ns_minus_1_recurrence(*c),
                        lambda c: count_oracle(ProblemInstance(c[0], c[1] * c[2] - 1, c[2])),
                        _lbl))
    return out


def suite_gf(dmax: int = 4, terms: int = 200, fit_dmax: int = 2, fit_nmax: int = 2) -> list[Check]:
    pairs = [(d, r) for d in range(1, dmax + 1) for r in range(1, d + 1)]
    out = [
        _compare("reduced == unreduced (50 terms)", pairs,
                 lambda c: gfm.series_coeffs(gfm.gf_dr(*c), 50),
                 lambda c: gfm.series_coeffs(gfm.gf_dr_unreduced(*c), 50), _lbl),
        _compare("r=1 reduced == unreduced (50 terms)", range(1, dmax + 1),
                 lambda d: gfm.series_coeffs(gfm.gf_d1(d), 50),
                 lambda d: gfm.series_coeffs(gfm.gf_d1_unreduced(d), 50), str),
        _compare(f"gf == recurrence ({terms} terms)", pairs,
                 lambda c: gfm.series_coeffs(gfm.gf_dr(*c), terms)[1:],
                 lambda c: fm.recurrence_sequence(c[0], c[1], terms - 1), _lbl),
        _compare("H_{d,1} shifted == {1,d+1}-compositions", range(1, dmax + 1),
                 lambda d: gfm.series_coeffs(gfm.h_d1(d), 41)[1:],
                 lambda d: [count_compositions({1, d + 1}, m) for m in range(40)], str),
    ]
    fits = []
    for d in range(1, fit_dmax + 1):
        for n in range(1, fit_nmax + 1):
            for c in range(1, d + 1):
                for sign in (1, -1):
                    fits.append(gfm.fit_family(d, n, sign, c))
    chk = _compare("fitted family gf predicts held-out oracle terms", fits,
                   lambda f: tuple(f.predicted[len(f.train):]), lambda f: f.holdout,
                   lambda f: f"(d={f.d},n={f.n},{'+' if f.sign > 0 else '-'}{f.c})")
    out.append(chk)
    for f in fits:
        thr = fm.recurrence_threshold(dict(enumerate(f.train + f.holdout)), f.d, f.n)
        out.append(Check(f"family d={f.d} n={f.n} r=ns{'+' if f.sign > 0 else '-'}{f.c}",
                         True, info=True,
                         details={"numerator": list(f.gf.numerator), "recurrence_from_s": thr}))
    return out


def suite_asym(dmax: int = 3, d: int | None = None, check_s: int = 500) -> list[Check]:
    ds = [d] if d is not None else list(range(1, dmax + 1))
    out = []
    roots = range(1, 1001)
    out.append(_compare("|f_d(w_d)| < 1e-12 and 0 < w_d < 1", roots,
                        lambda k: (abs(asy.f_d(k, asy.find_wd(k))) < 1e-12
                                   and 0 < asy.find_wd(k) < 1),
                        lambda k: True, str))
    out.append(_compare("|w_d - w*_d| <= 2 loglog(d+1)/(d+1)", range(3, 1001),
                        lambda k: abs(asy.find_wd(k) - asy.wd_approx(k)) <= asy.wd_approx_bound(k),
                        lambda k: True, str))
    for k in ds:
        for r in range(1, k + 1):
            m = asy.model_r(k, r, check_s)
            ratio = asy.printed_constant(k, r) / m.K
            ok = m.relative_error < 1e-6 and abs(ratio / m.w - 1) < 1e-12
            out.append(Check(f"prefactor d={k} r={r}", ok, 1, details={
                "w": mpmath.nstr(m.w, 12), "K": mpmath.nstr(m.K, 12),
                "rel_err": mpmath.nstr(m.relative_error, 3),
                "K_printed/K": mpmath.nstr(ratio, 12)}))
    return out


def suite_comp(dmax: int = 5, smax: int = 30) -> list[Check]:
    cases = [(d, s) for d in range(1, dmax + 1) for s in range(1, smax + 1)]
    out = [
        _compare("{1,d+1}-compositions of s+d-1 == N_{d,1}(s)", cases,
                 lambda c: count_compositions({1, c[0] + 1}, c[1] + c[0] - 1),
                 lambda c: fm.n_d1_closed(*c), _lbl),
        _compare("{1,d+1}-compositions == oracle", [c for c in cases if c[1] <= 20],
                 lambda c: count_compositions({1, c[0] + 1}, c[1] + c[0] - 1),
                 lambda c: count_oracle(ProblemInstance(c[0], 1, c[1])), _lbl),
    ]
    sets = [(1, 2), (1, 3), (2, 3), (1, 2, 3), (2, 5), (1, 4, 6), (3,), (2, 4, 6)]
    out.append(_compare("composition DP == gf coefficients", sets,
                        lambda a: [count_compositions(a, m) for m in range(41)],
                        lambda a: gfm.series_coeffs(composition_gf(a), 41), str))
    return out


def run_suite(name: str, **limits) -> list[Check]:
    if name == "all":
        out = []
        for s in SUITES:
            out.extend(run_suite(s, **limits))
        return out
    fn = {"rle": suite_rle, "ns1": suite_ns1, "gf": suite_gf,
          "asym": suite_asym, "comp": suite_comp}[name]
    accepted = inspect.signature(fn).parameters
    return fn(**{k: v for k, v in limits.items() if k in accepted and v is not None})


def all_passed(checks) -> bool:
    return all(c.passed for c in checks if not c.info)
