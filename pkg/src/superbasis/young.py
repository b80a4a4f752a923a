"""Partitions, conjugation and strip predicates on bipartitions.

A GT row above level m splits into its even labels and its odd labels.  For
covariant tensor modules both halves are partitions: the even half is the
first m rows of a hook diagram and the odd half lists the column lengths of
the rest.  One branching step then removes a vertical strip from the even
half and a horizontal strip from the odd half, i.e. a vertical strip from
the whole diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Partition",
    "Bipartition",
    "conjugate",
    "is_horizontal_strip",
    "is_vertical_strip",
    "strip_branching_check",
    "is_hook_bipartition",
    "negate_reverse",
    "row_bipartition",
    "hook_weight",
    "count_supertableaux",
]


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of nonnegative integers, trailing zeros dropped."""

    parts: tuple

    def __init__(self, parts: Iterable[int] = ()):
        raw = []
        for x in parts:
            x = Fraction(x)
            if x.denominator != 1:
                raise ValueError(f"partition parts must be integers, got {x}")
            raw.append(int(x))
        if any(x < 0 for x in raw):
            raise ValueError(f"partition parts must be nonnegative: {raw}")
        if any(a < b for a, b in zip(raw, raw[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {raw}")
        while raw and raw[-1] == 0:
            raw.pop()
        object.__setattr__(self, "parts", tuple(raw))

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        # Missing parts read as zero, which keeps the strip tests short.
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Bipartition:
    even: Partition
    odd: Partition

    def __str__(self) -> str:
        return f"({self.even}, {self.odd})"


def conjugate(p: Partition) -> Partition:
    """Column lengths of the diagram of ``p``."""
    if not p.parts:
        return Partition()
    return Partition(sum(1 for x in p.parts if x > j) for j in range(p.parts[0]))


def _contains(outer: Partition, inner: Partition) -> bool:
    return len(inner) <= len(outer) and all(outer[i] >= inner[i] for i in range(len(inner)))


def is_horizontal_strip(outer: Partition, inner: Partition) -> bool:
    """``outer / inner`` has at most one box in each column."""
    if not _contains(outer, inner):
        return False
    return all(inner[i] >= outer[i + 1] for i in range(len(outer)))


def is_vertical_strip(outer: Partition, inner: Partition) -> bool:
    """``outer / inner`` has at most one box in each row."""
    if not _contains(outer, inner):
        return False
    return all(outer[i] - inner[i] <= 1 for i in range(len(outer)))


def strip_branching_check(upper: Bipartition, lower: Bipartition) -> bool:
    """Branching between consecutive super-level rows of a covariant pattern.

    Even labels drop by at most one each (vertical strip); odd labels
    interlace (horizontal strip).
    """
    return is_vertical_strip(upper.even, lower.even) and is_horizontal_strip(upper.odd, lower.odd)


def is_hook_bipartition(b: Bipartition, m: int) -> bool:
    """Does ``b`` come from a diagram in the (m, *) hook?

    The odd half lists column lengths below row m, so it can have at most
    ``even[m-1]`` nonzero parts.
    """
    return len(b.even) <= m and len(b.odd) <= b.even[m - 1]


def negate_reverse(labels: Sequence) -> tuple:
    """Map a non-positive dominant label list to a partition: reverse, then negate."""
    return tuple(-Fraction(x) for x in reversed(labels))


def row_bipartition(m: int, row: Sequence) -> Bipartition:
    """Split a covariant GT row above level m into its (even, odd) partitions."""
    return Bipartition(Partition(row[:m]), Partition(row[m:]))


def hook_weight(m: int, n: int, shape: Partition) -> tuple[list, list] | None:
    """Covariant highest weight of a partition in the (m, n) hook, or ``None``.

    Even labels are the first m rows; odd labels are the column lengths of
    the part of the diagram below row m.
    """
    if shape[m] > n:
        return None
    even = [shape[i] for i in range(m)]
    tail = conjugate(Partition(shape.parts[m:]))
    odd = [tail[j] for j in range(n)]
    return even, odd


def count_supertableaux(m: int, n: int, shape: Partition) -> int:
    """Number of semistandard (m|n) supertableaux of the given shape.

    Letters ``0..m-1`` are even (weakly increasing along rows, strictly down
    columns) and ``m..m+n-1`` are odd (strictly along rows, weakly down
    columns), every even letter smaller than every odd one.  This equals the
    dimension of the covariant tensor module of that shape.
    """
    cells = [(i, j) for i, r in enumerate(shape.parts) for j in range(r)]
    filling: dict = {}

    def ok(i: int, j: int, x: int) -> bool:
        odd = x >= m
        if j > 0:
            left = filling[(i, j - 1)]
            if left > x or (odd and left == x):
                return False
        if i > 0:
            up = filling[(i - 1, j)]
            if up > x or (not odd and up == x):
                return False
        return True

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        total = 0
        for x in range(m + n):
            if ok(i, j, x):
                filling[(i, j)] = x
                total += rec(idx + 1)
        filling.pop((i, j), None)
        return total

    return rec(0)
