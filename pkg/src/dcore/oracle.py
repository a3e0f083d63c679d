"""Brute-force ground truth for N_{d,r}(s).

N_{d,r}(s) is the number of finite sets of positive integers that are
closed under subtracting s and s+r (while staying positive) and whose
pairwise gaps all exceed d.  This module enumerates those sets directly,
inside a universe {1..bound} that provably contains every member.

Everything else in the package is checked against these counts.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterator

from .partitions import BetaSet, ProblemInstance, is_member_X

NAIVE_MAX_BOUND = 20


class BudgetExceeded(RuntimeError):
    """An enumeration cap was hit; ``cap`` names which one."""

    def __init__(self, cap: str, limit: int, needed=None):
        self.cap = cap
        self.limit = limit
        self.needed = needed
        msg = f"{cap} exceeded (limit {limit}"
        msg += f", needed {needed})" if needed is not None else ")"
        super().__init__(msg)


class DomainError(ValueError):
    """Arguments outside the domain where a formula or routine is defined."""


class _Infinite:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __str__(self):
        return "infinite"

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()


@dataclass(frozen=True)
class EnumerationBudget:
    max_universe: int = 64
    max_sets: int = 10**8

    def __post_init__(self):
        if self.max_universe < 1 or self.max_sets < 1:
            raise ValueError("budget caps must be positive")

    @classmethod
    def from_env(cls) -> "EnumerationBudget":
        """Default budget, with max_universe overridable via DCORE_BUDGET."""
        raw = os.environ.get("DCORE_BUDGET")
        if raw:
            return cls(max_universe=int(raw))
        return cls()


DEFAULT_BUDGET = EnumerationBudget()


def is_finite(d: int, r: int, s: int) -> bool:
    return gcd(s, r) <= d


def infinite_witness(d: int, r: int, s: int, a: int) -> BetaSet:
    """The set {1, 1+g, ..., 1+a*g} with g = gcd(s, r); a member of X for every a when g > d."""
    g = gcd(s, r)
    if g <= d:
        raise DomainError(f"gcd({s}, {r}) = {g} <= d = {d}: instance is finite")
    if a < 0:
        raise ValueError("a must be nonnegative")
    return tuple(1 + k * g for k in range(a + 1))


def beta_upper_bound(d: int, r: int, s: int, budget: EnumerationBudget = DEFAULT_BUDGET) -> int:
    """Largest value any member of X_{d,r,s} can contain.

    Takes the smallest of the applicable bounds:
      r <= d            s + r - 1
      r = ns + c        (n+1)s + c - 1      (1 <= c <= d)
      r = ns - c        (n+1)s - 1          (1 <= c <= d)
      otherwise         (s-g)(s+r-g)/g + 2g, g = gcd(s, r)
    """
    if min(d, r, s) < 1:
        raise DomainError("d, r, s must be positive")
    g = gcd(s, r)
    if g > d:
        raise DomainError(f"gcd({s}, {r}) = {g} > d = {d}: no finite bound exists")
    bounds = [(s - g) * (s + r - g) // g + 2 * g]
    if r <= d:
        bounds.append(s + r - 1)
    n, rem = divmod(r, s)
    if n >= 1 and 1 <= rem <= d:
        bounds.append((n + 1) * s + rem - 1)
    # r = (n+1)s - (s - rem)
    if 1 <= s - rem <= d:
        bounds.append((n + 2) * s - 1)
    bound = max(min(bounds), 0)
    if bound > budget.max_universe:
        raise BudgetExceeded("max_universe", budget.max_universe, bound)
    return bound


def _check(inst: ProblemInstance) -> None:
    if inst.s < 1:
        raise DomainError("enumeration over a bound requires s >= 1")
    if not is_finite(inst.d, inst.r, inst.s):
        raise DomainError(f"N_{{{inst.d},{inst.r}}}({inst.s}) is infinite")


def _walk(d: int, r: int, s: int, bound: int) -> Iterator[tuple]:
    # Depth-first, elements added in increasing order, so output is lexicographic.
    # Bit x of mask marks x as present; bit 0 is never set, which also rejects x == s.
    t = s + r

    def rec(start, mask, prefix):
        yield prefix
        for x in range(start, bound + 1):
            if x >= s and not (mask >> (x - s)) & 1:
                continue
            if x >= t and not (mask >> (x - t)) & 1:
                continue
            yield from rec(x + d + 1, mask | (1 << x), prefix + (x,))

    yield from rec(1, 0, ())


def enumerate_X(inst: ProblemInstance, budget: EnumerationBudget = DEFAULT_BUDGET) -> list[BetaSet]:
    """Every member of X_{d,r,s}, once each, in lexicographic order."""
    _check(inst)
    bound = beta_upper_bound(inst.d, inst.r, inst.s, budget)
    out = []
    for b in _walk(inst.d, inst.r, inst.s, bound):
        out.append(b)
        if len(out) > budget.max_sets:
            raise BudgetExceeded("max_sets", budget.max_sets)
    return out


def _count(d: int, r: int, s: int, bound: int, cap: int) -> int:
    t = s + r
    total = 0

    def rec(start, mask):
        nonlocal total
        total += 1
        if total > cap:
            raise BudgetExceeded("max_sets", cap)
        for x in range(start, bound + 1):
            if x >= s and not (mask >> (x - s)) & 1:
                continue
            if x >= t and not (mask >> (x - t)) & 1:
                continue
            rec(x + d + 1, mask | (1 << x))

    rec(1, 0)
    return total


def _satisfies(members: frozenset, d: int, r: int, s: int) -> bool:
    # The three defining conditions read literally; also meaningful for s <= 0.
    for x in members:
        if x >= s and x - s not in members:
            return False
        if x >= s + r and x - (s + r) not in members:
            return False
    ordered = sorted(members)
    return all(y - x > d for x, y in zip(ordered, ordered[1:]))


def enumerate_X_naive(inst: ProblemInstance, bound: int | None = None) -> list[BetaSet]:
    """Full power-set sweep of {1..bound}; only for tiny universes.

    For s <= 0 (r <= d) the universe is {1..s+r-1}, which is how the count
    is extended to nonpositive s.
    """
    d, r, s = inst.d, inst.r, inst.s
    if bound is None:
        bound = s + r - 1 if s <= 0 else beta_upper_bound(d, r, s)
    if bound > NAIVE_MAX_BOUND:
        raise BudgetExceeded("naive_bound", NAIVE_MAX_BOUND, bound)
    universe = range(1, max(bound, 0) + 1)
    found = []
    for k in range(len(universe) + 1):
        for combo in combinations(universe, k):
            if s >= 1:
                ok = is_member_X(combo, inst)
            else:
                ok = _satisfies(frozenset(combo), d, r, s)
            if ok:
                found.append(combo)
    return sorted(found)


def count_oracle(inst: ProblemInstance, budget: EnumerationBudget = DEFAULT_BUDGET):
    """N_{d,r}(s) by enumeration; INFINITE when gcd(s, r) > d.

    For s <= 0 (only defined for r <= d) the tiny universe {1..s+r-1} is
    swept exhaustively.
    """
    d, r, s = inst.d, inst.r, inst.s
    if s <= 0:
        return len(enumerate_X_naive(inst))
    if not is_finite(d, r, s):
        return INFINITE
    bound = beta_upper_bound(d, r, s, budget)
    return _count(d, r, s, bound, budget.max_sets)


def count(d: int, r: int, s: int, budget: EnumerationBudget = DEFAULT_BUDGET):
    return count_oracle(ProblemInstance(d, r, s), budget)
