"""Partitions, hook lengths and beta-sets.

A beta-set is the set of first-column hook lengths of a partition.  The
map partition -> beta-set is a bijection onto finite sets of positive
integers, and the s-core and d-distinct conditions both read off the
beta-set directly:

    s-core          every x >= s in the set has x - s in the set
    d-distinct      all pairwise gaps in the set exceed d

Beta-sets are kept as ascending tuples of ints.
"""
from __future__ import annotations

import json
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Sequence

BetaSet = tuple  # ascending tuple[int, ...]


class PartitionError(ValueError):
    """Raised for malformed partition or beta-set input."""

    def __init__(self, message: str, value=None):
        super().__init__(message)
        self.value = value


@dataclass(frozen=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise PartitionError(f"part {p!r} is not an integer", parts)
            if p <= 0:
                raise PartitionError(f"part {p} is not positive", parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise PartitionError(f"parts not nonincreasing at {a}, {b}", parts)
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(tuple(sum(1 for p in self.parts if p >= j)
                               for j in range(1, self.parts[0] + 1)))

    def to_json(self) -> str:
        return json.dumps(list(self.parts))

    @classmethod
    def from_json(cls, text: str) -> "Partition":
        data = json.loads(text)
        if not isinstance(data, list):
            raise PartitionError("partition JSON must be an array", data)
        return cls(tuple(data))


@dataclass(frozen=True)
class ProblemInstance:
    """Parameters (d, r, s) of N_{d,r}(s): (s, s+r)-cores with d-distinct parts."""

    d: int
    r: int
    s: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"d must be >= 1, got {self.d}")
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")
        if self.s <= 0 and self.r > self.d:
            raise ValueError(f"s <= 0 is only defined for r <= d (got r={self.r}, d={self.d})")


def as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(tuple(p))


def as_beta(b: Iterable[int]) -> BetaSet:
    """Normalise an iterable into an ascending beta-set tuple, validating it."""
    items = sorted(b)
    for x in items:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise PartitionError(f"beta-set element {x!r} is not a positive integer", items)
    for a, c in zip(items, items[1:]):
        if a == c:
            raise PartitionError(f"duplicate beta-set element {a}", items)
    return tuple(items)


def beta_to_json(b: Sequence[int]) -> str:
    return json.dumps(list(as_beta(b)))


def hook_lengths(p) -> list[list[int]]:
    """Hook length of every cell, row by row.

    Uses h(i, j) = lambda_i - j + lambda'_j - i + 1 with the conjugate
    partition lambda'; the diagram is never built.
    """
    p = as_partition(p)
    cols = p.conjugate().parts
    return [[row - j + cols[j - 1] - i + 1 for j in range(1, row + 1)]
            for i, row in enumerate(p.parts, start=1)]


def hook_lengths_reference(p) -> list[list[int]]:
    # Materialise the diagram and count arm + leg cells directly.
    p = as_partition(p)
    cells = {(i, j) for i, row in enumerate(p.parts) for j in range(row)}
    out = []
    for i, row in enumerate(p.parts):
        line = []
        for j in range(row):
            arm = sum(1 for jj in range(j + 1, row) if (i, jj) in cells)
            leg = sum(1 for ii in range(i + 1, len(p.parts)) if (ii, j) in cells)
            line.append(arm + leg + 1)
        out.append(line)
    return out


def hook_set(p) -> set[int]:
    """All hook lengths occurring in p."""
    return {h for row in hook_lengths(p) for h in row}


def beta_set(p) -> BetaSet:
    p = as_partition(p)
    k = len(p.parts)
    return tuple(sorted(part + k - i for i, part in enumerate(p.parts, start=1)))


def partition_from_beta(b: Iterable[int]) -> Partition:
    desc = sorted(as_beta(b), reverse=True)
    k = len(desc)
    return Partition(tuple(x - (k - i) for i, x in enumerate(desc, start=1)))


def _contains(b: Sequence[int], x: int) -> bool:
    i = bisect_left(b, x)
    return i < len(b) and b[i] == x


def is_s_core(b: Sequence[int], s: int) -> bool:
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    b = as_beta(b)
    return all(_contains(b, x - s) for x in b if x >= s)


def is_twin_free(b: Sequence[int], d: int) -> bool:
    """True iff all pairwise gaps exceed d (consecutive gaps suffice once sorted)."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    b = as_beta(b)
    return all(y - x > d for x, y in zip(b, b[1:]))


def is_member_X(b: Sequence[int], inst: ProblemInstance) -> bool:
    """Membership in X_{d,r,s}: closed under -s and -(s+r), and d-th order twin-free."""
    if inst.s < 1:
        raise ValueError("is_member_X requires s >= 1")
    return (is_s_core(b, inst.s) and is_s_core(b, inst.s + inst.r)
            and is_twin_free(b, inst.d))


def has_d_distinct_parts(p, d: int) -> bool:
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    parts = as_partition(p).parts
    return all(a - b >= d for a, b in zip(parts, parts[1:]))
