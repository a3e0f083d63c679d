"""Compositions with parts restricted to a finite set A.

The {1, d+1}-restricted compositions of s+d-1 are equinumerous with the
(s, s+1)-cores with d-distinct parts: a twin-free subset of {1..s-1}
corresponds to tiling {1..s+d-1} with blocks of length d+1 (an element
and its forbidden tail) and single cells.
"""
from __future__ import annotations

from .genfunc import RationalGF


def part_set(allowed) -> tuple:
    parts = tuple(sorted(set(allowed)))
    if not parts:
        raise ValueError("part set must be nonempty")
    if parts[0] < 1:
        raise ValueError("parts must be positive")
    return parts


def count_compositions(allowed, n: int) -> int:
    """Number of ordered sequences of elements of ``allowed`` summing to n."""
    parts = part_set(allowed)
    if n < 0:
        raise ValueError("n must be nonnegative")
    ways = [1] + [0] * n
    for m in range(1, n + 1):
        ways[m] = sum(ways[m - k] for k in parts if k <= m)
    return ways[n]


def composition_gf(allowed) -> RationalGF:
    """1 / (1 - sum_{k in A} x^k)."""
    parts = part_set(allowed)
    den = [0] * (parts[-1] + 1)
    den[0] = 1
    for k in parts:
        den[k] -= 1
    return RationalGF((1,), tuple(den))
