"""Growth rates and prefactors.

For r <= d the counts grow like K * (1/w)^s, where w is the unique
positive root of z^{d+1} + z - 1.  For the families r = ns +/- c the root
is that of 1 - x - (n+1)x^{d+1} instead.

All values are mpmath mpf at DPS decimal digits.

Prefactor.  The generating function G has a simple pole at w with
residue R = -w^3 / ((1-w)(d+1-dw)).  Expanding R/(z-w) gives coefficient
-R * w^{-s-1}, so the prefactor is K = -R/w = w^2/((1-w)(d+1-dw)).  The
expression w^3/(...) with the 1/w missing (``printed_constant``) is off by
exactly a factor w; for d = 1 it gives 1/sqrt(5) where Fibonacci
numbers demand phi/sqrt(5).  ``prefactor_limit`` measures K directly
from exact counts.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

import mpmath
from mpmath import mpf

from .oracle import DomainError

DPS = 40


def _poly_root(f, df, tol, lo=mpf(0), hi=mpf(1), increasing=True) -> mpf:
    # bisection to 1e-12, then Newton; f is monotone on [lo, hi]
    with mpmath.workdps(DPS):
        while hi - lo > mpf("1e-12"):
            mid = (lo + hi) / 2
            if (f(mid) < 0) == increasing:
                lo = mid
            else:
                hi = mid
        x = (lo + hi) / 2
        for _ in range(100):
            step = f(x) / df(x)
            x -= step
            if abs(f(x)) <= tol * abs(df(x)) and abs(step) < mpf(10) ** (-DPS + 5):
                break
        return x


def f_d(d: int, z):
    return z ** (d + 1) + z - 1


def find_wd(d: int, tol: float = 1e-15) -> mpf:
    """Unique positive root of z^{d+1} + z - 1 (it lies in (0, 1))."""
    if d < 1:
        raise DomainError("d must be positive")
    if tol < 1e-15:
        raise ValueError("tol must be >= 1e-15")
    return _poly_root(lambda z: f_d(d, z), lambda z: (d + 1) * z**d + 1, mpf(tol))


def f_dn(d: int, n: int, x):
    return 1 - x - (n + 1) * x ** (d + 1)


def find_wdn(d: int, n: int, tol: float = 1e-15) -> mpf:
    """Root in (0, 1) of 1 - x - (n+1)x^{d+1}; n = 0 gives find_wd(d)."""
    if d < 1 or n < 0:
        raise DomainError("need d >= 1, n >= 0")
    if tol < 1e-15:
        raise ValueError("tol must be >= 1e-15")
    return _poly_root(lambda x: f_dn(d, n, x),
                      lambda x: -1 - (n + 1) * (d + 1) * x**d,
                      mpf(tol), increasing=False)


def wd_approx(d: int) -> float:
    """1 - log(d+1)/(d+1) + loglog(d+1)/(d+1).  For d = 1, loglog 2 < 0."""
    L = math.log(d + 1)
    return 1 - L / (d + 1) + math.log(L) / (d + 1)


def wd_approx_bound(d: int, constant: float = 2.0) -> float:
    return constant * math.log(math.log(d + 1)) / (d + 1)


def residue_at(d: int, w) -> mpf:
    """Residue of G_{d,1} at a root w: -w^3 / ((1-w)(d+1-dw))."""
    with mpmath.workdps(DPS):
        w = mpf(w)
        denom = (1 - w) * (d + 1 - d * w)
        if denom == 0:
            raise ZeroDivisionError(f"w = {w} makes the residue denominator vanish")
        return -w**3 / denom


def asymptotic_constant(d: int, r: int = 1) -> mpf:
    """K with N_{d,r}(s) * w_d^s -> K: w^2 (1 + (r-1) w^{2d}) / ((1-w)(d+1-dw))."""
    if r > d or r < 1:
        raise DomainError(f"asymptotics require 1 <= r <= d (got r={r}, d={d})")
    with mpmath.workdps(DPS):
        w = find_wd(d)
        return -residue_at(d, w) / w * (1 + (r - 1) * w ** (2 * d))


def printed_constant(d: int, r: int = 1) -> mpf:
    """w^3 (1 + (r-1) w^{2d}) / ((1-w)(d+1-dw)), i.e. -Res without the 1/w."""
    if r > d or r < 1:
        raise DomainError(f"asymptotics require 1 <= r <= d (got r={r}, d={d})")
    with mpmath.workdps(DPS):
        w = find_wd(d)
        return -residue_at(d, w) * (1 + (r - 1) * w ** (2 * d))


def prefactor_limit(d: int, r: int = 1, s: int = 500) -> mpf:
    """N_{d,r}(s) * w_d^s from the exact count; tends to the prefactor."""
    from .formulas import n_dr_recurrence

    with mpmath.workdps(DPS):
        return mpf(n_dr_recurrence(d, r, s)) * find_wd(d) ** s


def asymptotic_estimate(d: int, r: int, s: int):
    """K * (1/w)^s as a float, or (mantissa, exponent10) when a float would overflow.

    Only meaningful for large s.
    """
    if s < 1:
        raise DomainError("s must be positive")
    with mpmath.workdps(DPS):
        val = asymptotic_constant(d, r) / find_wd(d) ** s
        try:
            out = float(val)
        except OverflowError:
            out = math.inf
        if math.isinf(out):
            e = int(mpmath.floor(mpmath.log10(val)))
            return float(val / mpf(10) ** e), e
        return out


@dataclass(frozen=True)
class AsymptoticModel:
    """count(s) ~ K (1/w)^s for one family.

    ``family`` is ("r", r) for r <= d or ("ns", n, sign, c) for r = ns + sign*c.
    """

    d: int
    family: tuple
    w: mpf
    K: mpf
    checked_at_s: int
    relative_error: mpf

    @property
    def r_label(self):
        if self.family[0] == "r":
            return self.family[1]
        _, n, sign, c = self.family
        return f"{n}s{'+' if sign > 0 else '-'}{c}"

    def to_dict(self, digits: int = 20) -> dict:
        return {"d": self.d, "r": self.r_label,
                "w": mpmath.nstr(self.w, digits),
                "K": mpmath.nstr(self.K, digits),
                "checked_at_s": self.checked_at_s,
                "relative_error": mpmath.nstr(self.relative_error, 3)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def model_r(d: int, r: int, check_s: int = 500) -> AsymptoticModel:
    with mpmath.workdps(DPS):
        K = asymptotic_constant(d, r)
        err = abs(prefactor_limit(d, r, check_s) / K - 1)
        return AsymptoticModel(d, ("r", r), find_wd(d), K, check_s, err)


def sequence_constant(values, w, s: int) -> mpf:
    with mpmath.workdps(DPS):
        return mpf(values[s]) * mpf(w) ** s


def model_family(d: int, n: int, sign: int, c: int, s: int = 400,
                 gf=None) -> AsymptoticModel:
    """Numerical k_{n,d,+/-c} = lim N(s) w_{d,n}^s.

    For r = ns - 1 the exact formula supplies N(s); other families need a
    fitted generating function (``gf``), fitted from oracle terms if absent.
    The reported error compares the estimates at s and s - 50.
    """
    from .genfunc import fit_family, series_coeffs
    from .formulas import n_ns_minus_1

    if gf is None and (sign, c) == (-1, 1):
        values = {t: n_ns_minus_1(d, n, t) for t in (s - 50, s)}
    else:
        gf = gf or fit_family(d, n, sign, c).gf
        values = series_coeffs(gf, s + 1)
    with mpmath.workdps(DPS):
        w = find_wdn(d, n)
        K = sequence_constant(values, w, s)
        err = abs(sequence_constant(values, w, s - 50) / K - 1)
        return AsymptoticModel(d, ("ns", n, sign, c), w, K, s, err)
