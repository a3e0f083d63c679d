"""Rational generating functions with integer coefficients.

Polynomials are plain tuples of ints, lowest degree first.  A RationalGF
is numerator/denominator with denominator constant term 1, so its power
series has integer coefficients given by

    a_s = P_s - sum_{j >= 1} Q_j a_{s-j}.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import oracle
from .oracle import DEFAULT_BUDGET, DomainError, EnumerationBudget
from .partitions import ProblemInstance


class NoFitError(ValueError):
    """No numerator of admissible degree reproduces the supplied terms."""


def trim(p) -> tuple:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_mul(a, b) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def degree(p) -> int:
    p = trim(p)
    return len(p) - 1


@dataclass(frozen=True)
class RationalGF:
    numerator: tuple
    denominator: tuple = field(default=(1,))

    def __post_init__(self):
        num = trim(int(c) for c in self.numerator)
        den = trim(int(c) for c in self.denominator)
        if not den or den[0] != 1:
            raise ValueError("denominator must have constant term 1")
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    def coeffs(self, count: int) -> list[int]:
        return series_coeffs(self, count)

    def to_dict(self) -> dict:
        return {"numerator": [str(c) for c in self.numerator],
                "denominator": [str(c) for c in self.denominator]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "RationalGF":
        data = json.loads(text)
        return cls(tuple(int(c) for c in data["numerator"]),
                   tuple(int(c) for c in data["denominator"]))


def series_coeffs(g: RationalGF, count: int) -> list[int]:
    num, den = g.numerator, g.denominator
    out: list[int] = []
    for s in range(count):
        v = num[s] if s < len(num) else 0
        for j in range(1, min(len(den), s + 1)):
            v -= den[j] * out[s - j]
        out.append(v)
    return out


def _main_denominator(d: int) -> tuple:
    # 1 - x - x^{d+1}
    den = [0] * (d + 2)
    den[0], den[1] = 1, -1
    den[d + 1] -= 1
    return tuple(den)


def gf_d1(d: int) -> RationalGF:
    """(x + x^2 + ... + x^{d+1}) / (1 - x - x^{d+1})."""
    if d < 1:
        raise DomainError("d must be positive")
    return RationalGF((0,) + (1,) * (d + 1), _main_denominator(d))


def gf_d1_unreduced(d: int) -> RationalGF:
    """x(1 - x^{d+1}) / ((1 - x - x^{d+1})(1 - x)), before cancelling 1 - x."""
    num = [0] * (d + 3)
    num[1], num[d + 2] = 1, -1
    return RationalGF(tuple(num), poly_mul(_main_denominator(d), (1, -1)))


def gf_dr(d: int, r: int) -> RationalGF:
    """(x + x^2 + ... + x^d + r x^{d+1}) / (1 - x - x^{d+1}) for r <= d.

    This is the unreduced form with 1 - x cancelled:
    1 + (r-1)x^d - r x^{d+1} = (1 - x)(1 + x + ... + x^{d-1} + r x^d).
    """
    if d < 1 or r < 1:
        raise DomainError("d and r must be positive")
    if r > d:
        raise DomainError(f"generating function requires r <= d (got r={r}, d={d})")
    return RationalGF((0,) + (1,) * d + (r,), _main_denominator(d))


def gf_dr_unreduced(d: int, r: int) -> RationalGF:
    """x(1 + (r-1)x^d - r x^{d+1}) / ((1 - x - x^{d+1})(1 - x))."""
    if r > d:
        raise DomainError(f"generating function requires r <= d (got r={r}, d={d})")
    num = [0] * (d + 3)
    num[1] += 1
    num[d + 1] += r - 1
    num[d + 2] -= r
    return RationalGF(tuple(num), poly_mul(_main_denominator(d), (1, -1)))


def h_d1(d: int) -> RationalGF:
    """Auxiliary x / (1 - x - x^{d+1}); its x^s coefficient is N_{d,1}(s-d)."""
    return RationalGF((0, 1), _main_denominator(d))


def family_denominator(d: int, n: int) -> tuple:
    """1 - x - (n+1) x^{d+1}."""
    den = [0] * (d + 2)
    den[0], den[1] = 1, -1
    den[d + 1] -= n + 1
    return tuple(den)


def fit_numerator(denominator, initial, min_surplus: int | None = None) -> tuple:
    """Lowest-degree P with P/denominator reproducing ``initial`` as its first terms.

    With Q the denominator and A the series, P must equal Q*A truncated to
    deg P; so P is read off the product and the remaining coefficients of
    Q*A must vanish.  That is the triangular solve, and it stays in exact
    integers because Q[0] = 1.  ``min_surplus`` is the number of supplied
    terms past deg P that must be confirmed; it defaults to deg Q, which
    caps deg P at len(initial) - deg Q - 1.
    """
    den = trim(denominator)
    if not den or den[0] != 1:
        raise ValueError("denominator must have constant term 1")
    terms = [int(a) for a in initial]
    if min_surplus is None:
        min_surplus = len(den) - 1
    prod = [sum(den[j] * terms[k - j] for j in range(min(len(den), k + 1)))
            for k in range(len(terms))]
    p = len(prod) - 1
    while p >= 0 and prod[p] == 0:
        p -= 1
    surplus = len(terms) - 1 - p
    if surplus < min_surplus:
        raise NoFitError(f"best numerator has degree {p}, leaving {surplus} confirming "
                         f"terms (< {min_surplus}); denominator wrong or too few terms")
    return trim(prod[:p + 1])


@dataclass(frozen=True)
class FamilyFit:
    """Fitted generating function for s -> N_{d, ns + sign*c}(s).

    The series is indexed by s; coefficients for s where r would be < 1
    are taken as 0.
    """

    d: int
    n: int
    sign: int
    c: int
    gf: RationalGF
    train: tuple
    holdout: tuple

    @property
    def predicted(self) -> list[int]:
        return series_coeffs(self.gf, len(self.train) + len(self.holdout))

    @property
    def holdout_ok(self) -> bool:
        return tuple(self.predicted[len(self.train):]) == self.holdout


def family_terms(d: int, n: int, sign: int, c: int, count: int,
                 budget: EnumerationBudget = DEFAULT_BUDGET) -> list[int]:
    """Oracle counts N_{d, ns + sign*c}(s) for s = 0..count-1 (0 where r < 1)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not 1 <= c <= d:
        raise DomainError(f"need 1 <= c <= d, got c={c}, d={d}")
    return family_terms_from(d, n, sign, c, 0, count, budget)


def fit_family(d: int, n: int, sign: int, c: int, holdout: int = 5,
               min_surplus: int = 5, max_terms: int = 40,
               budget: EnumerationBudget = DEFAULT_BUDGET) -> FamilyFit:
    """Fit the numerator over 1 - x - (n+1)x^{d+1} from oracle terms.

    The training window grows until an exact fit with ``min_surplus``
    confirming terms exists; ``holdout`` further oracle terms are then
    computed for validation (not asserted here).
    """
    den = family_denominator(d, n)
    length = len(den) + min_surplus
    terms = family_terms(d, n, sign, c, length, budget)
    while True:
        try:
            num = fit_numerator(den, terms, min_surplus)
            break
        except NoFitError:
            if len(terms) >= max_terms:
                raise
            terms += family_terms_from(d, n, sign, c, len(terms), 1, budget)
    extra = family_terms_from(d, n, sign, c, len(terms), holdout, budget)
    return FamilyFit(d, n, sign, c, RationalGF(num, den), tuple(terms), tuple(extra))


def family_terms_from(d, n, sign, c, start, count, budget=DEFAULT_BUDGET) -> list[int]:
    """Oracle counts for s = start..start+count-1."""
    out = []
    for s in range(start, start + count):
        r = n * s + sign * c
        out.append(0 if s < 1 or r < 1 else oracle.count_oracle(ProblemInstance(d, r, s), budget))
    return out
