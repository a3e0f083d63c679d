"""Closed forms and recurrences for N_{d,r}(s).

Two regimes are covered:

* r <= d: binomial sums, the reduction to r = 1, and the two-term
  recurrence N(s) = N(s-1) + N(s-d-1), all extended to s <= 0 by
  N(s) = 1 for s < 0 and N(0) = N_{d,1}(r).
* r = ns - 1: a five-part binomial sum weighted by powers of n+1, and
  the matching recurrence.

Every bounded sum uses the same convention: binom(n, k) is 0 outside
0 <= k <= n, and a sum whose upper limit is below its lower limit is 0.
All arithmetic is on Python ints.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb

from .oracle import DomainError


def binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _bsum(upper: int, term) -> int:
    # sum_{mu=0}^{upper} term(mu); empty when upper < 0
    return sum(term(mu) for mu in range(upper + 1))


def _require_r_le_d(d: int, r: int) -> None:
    if d < 1 or r < 1:
        raise DomainError("d and r must be positive")
    if r > d:
        raise DomainError(f"formula requires r <= d (got r={r}, d={d})")


# --- r <= d ---------------------------------------------------------------

def n_d1_closed(d: int, s: int) -> int:
    """N_{d,1}(s) = sum_{mu=0}^{ceil((s-1)/(d+1))} binom(s+d-d*mu-1, mu), valid for s >= 1-d."""
    if d < 1:
        raise DomainError("d must be positive")
    if s < 1 - d:
        raise DomainError(f"closed r=1 formula needs s >= {1 - d}, got {s}")
    return _bsum(ceil_div(s - 1, d + 1), lambda mu: binom(s + d - d * mu - 1, mu))


def n_dr_extended(d: int, r: int, s: int) -> int:
    """Value of N_{d,r}(s) for s <= 0."""
    _require_r_le_d(d, r)
    if s > 0:
        raise DomainError(f"extension only covers s <= 0, got {s}")
    return 1 if s < 0 else n_d1_closed(d, r)


def _n_d1(d: int, t: int) -> int:
    return 1 if t <= 0 else n_d1_closed(d, t)


def r_reduction(d: int, r: int, s: int) -> int:
    """N_{d,r}(s) from N_{d,1}: N_{d,1}(s) + (r-1) N_{d,1}(s-2d) once s > d."""
    _require_r_le_d(d, r)
    if s < 1:
        raise DomainError(f"s must be positive, got {s}")
    if s <= d:
        return _n_d1(d, s)
    return _n_d1(d, s) + (r - 1) * _n_d1(d, s - 2 * d)


def n_dr_closed(d: int, r: int, s: int) -> int:
    _require_r_le_d(d, r)
    if s < 1:
        raise DomainError(f"s must be positive, got {s}")
    first = _bsum(ceil_div(s - 1, d + 1), lambda mu: binom(s + d - d * mu - 1, mu))
    second = _bsum(ceil_div(s - 2 * d - 1, d + 1), lambda mu: binom(s - d - d * mu - 1, mu))
    return first + (r - 1) * second


@lru_cache(maxsize=256)
def _recurrence_table(d: int, r: int, upto: int) -> tuple:
    # index i holds N(i - d); slots for -d..0 are the extended base values
    if r == 1:
        zero = 1
    else:
        zero = _recurrence_table(d, 1, r)[r + d]
    vals = [1] * d + [zero]
    for s in range(1, upto + 1):
        if s == 1:
            vals.append(1)
        else:
            vals.append(vals[s - 1 + d] + vals[s - d - 1 + d])
    return tuple(vals)


def recurrence_sequence(d: int, r: int, count: int) -> list[int]:
    """[N_{d,r}(1), ..., N_{d,r}(count)] from the two-term recurrence."""
    _require_r_le_d(d, r)
    if count <= 0:
        return []
    return list(_recurrence_table(d, r, count)[d + 1:])


def n_dr_recurrence(d: int, r: int, s: int) -> int:
    """N_{d,r}(s) via N(s) = N(s-1) + N(s-d-1) seeded from the s <= 0 extension.

    The seed N_{d,r}(0) = N_{d,1}(r) is itself produced by the r = 1
    recurrence, so this path never touches the binomial sums.
    """
    _require_r_le_d(d, r)
    if s <= 0:
        if s < 0:
            return 1
        return _recurrence_table(d, r, 1)[d]
    return _recurrence_table(d, r, s)[s + d]


# --- r = ns - 1 -------------------------------------------------------------

def b_dn(d: int, n: int, t: int) -> int:
    """sum_{mu=0}^{ceil(t/(d+1))} binom(t+d-d*mu, mu) (n+1)^mu.

    Under the binomial convention this is 1 for -d <= t <= 0 and 0 for
    t < -d, which is what the recurrence B(t) = B(t-1) + (n+1) B(t-d-1)
    needs at its left edge.
    """
    m = n + 1
    return _bsum(ceil_div(t, d + 1), lambda mu: binom(t + d - d * mu, mu) * m**mu)


def _check_ns(d: int, n: int, s: int) -> None:
    if d < 1 or n < 1 or s < 1:
        raise DomainError("d, n, s must be positive")
    if n * s - 1 < 1:
        raise DomainError(f"r = n*s - 1 = {n * s - 1} is not positive")


def n_ns_minus_1_printed(d: int, n: int, s: int) -> int:
    """The five-part sum for N_{d,ns-1}(s), transcribed term for term.

    Known to disagree with enumeration for d = 1 (every s >= 2) and for
    s <= d when d > 1; use ``n_ns_minus_1`` for correct values.
    """
    _check_ns(d, n, s)
    m = n + 1
    if d == 1:
        return _bsum(ceil_div(s - 1, 2), lambda mu: binom(s - mu, mu) * m**mu)

    def tail(upper, top):
        return _bsum(upper, lambda mu: binom(top - d * mu, mu) * m**mu)

    total = tail(ceil_div(s - d, d + 1), s)
    total += n * tail(ceil_div(s - 2 * d - 1, d + 1), s - d - 1)
    total += n * sum(tail(ceil_div(s - 2 * d - k - 2, d + 1), s - d - k - 2)
                     for k in range(1, d))
    total += sum(m * tail(ceil_div(s - 2 * d - 1, d + 1), s - d - 1)
                 for _ in range(1, d - 1))
    total += sum(m * tail(ceil_div(s - 3 * d + l - k - 1, d + 1), s - 2 * d + l - k - 1)
                 for l in range(1, d - 1) for k in range(1, l + 1))
    return total


def n_ns_minus_1(d: int, n: int, s: int) -> int:
    """N_{d,ns-1}(s), exact for every valid (d, n, s).

    Agrees with the five-part sum for d >= 2 and s > d.  The remaining
    cases are handled separately:

    * s <= d: no element can be lifted by s without a gap <= d, and at
      most one element fits below s, so the count is s.
    * d = 1: the element s-1 lifts at most n times, since (s-1) + ns is
      s + r itself.  Splitting on whether s-1 is present gives
      B(s-2) + n*B(s-3).
    """
    _check_ns(d, n, s)
    if s <= d:
        return s
    if d == 1:
        return b_dn(1, n, s - 2) + n * b_dn(1, n, s - 3)
    return n_ns_minus_1_printed(d, n, s)


def n_ns_minus_1_recurrence(d: int, n: int, s: int, printed: bool = False) -> int:
    """Right-hand side N_{d,n(s-1)-1}(s-1) + (n+1) N_{d,n(s-d-1)-1}(s-d-1), for s >= 3d+2."""
    if s < 3 * d + 2:
        raise DomainError(f"recurrence stated for s >= {3 * d + 2}, got {s}")
    f = n_ns_minus_1_printed if printed else n_ns_minus_1
    return f(d, n, s - 1) + (n + 1) * f(d, n, s - d - 1)


def family_r(n: int, s: int, sign: int, c: int) -> int:
    """r = n*s + sign*c."""
    return n * s + sign * c


def recurrence_threshold(values: dict, d: int, n: int) -> int | None:
    """Smallest s0 such that a(s) = a(s-1) + (n+1) a(s-d-1) for every tabulated s >= s0.

    ``values`` maps s to a count; s values absent from it are not checked.
    Returns None if the identity fails at the largest checkable s.
    """
    checkable = sorted(s for s in values if s - 1 in values and s - d - 1 in values)
    threshold = None
    for s in reversed(checkable):
        if values[s] != values[s - 1] + (n + 1) * values[s - d - 1]:
            break
        threshold = s
    return threshold
