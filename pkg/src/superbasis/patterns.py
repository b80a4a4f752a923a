"""Gelfand-Tsetlin patterns for the chain gl(m|n) > gl(m|n-1) > ... > gl(m) > ... > gl(1).

Row ``p`` (``1 <= p <= m+n``) carries ``p`` labels addressed by ungraded slots
``1..p``: slots ``1..min(p, m)`` are even, slots ``m+1..p`` are odd.  Patterns
store rows top-first, so ``rows[0]`` is the highest weight.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .radicals import as_fraction, format_fraction
from .weights import Signature, UnitaryClass, Weight, classify, is_dominant, rho

__all__ = [
    "GTPattern",
    "PatternDelta",
    "DimensionCapExceeded",
    "MalformedPatternError",
    "DEFAULT_DIM_CAP",
    "default_dim_cap",
    "row_weight",
    "row_class",
    "row_admits",
    "gl_m1_pairing",
    "level_pairing",
    "validate",
    "pair_ok",
    "enumerate_basis",
    "highest_pattern",
    "weight_of",
    "apply_delta",
    "level_of_pattern",
    "grading_of",
    "check_theta",
]

DEFAULT_DIM_CAP = 4096


def default_dim_cap() -> int:
    env = os.environ.get("SUPERBASIS_DIM_CAP")
    return int(env) if env else DEFAULT_DIM_CAP


class DimensionCapExceeded(RuntimeError):
    pass


class MalformedPatternError(ValueError):
    pass


@dataclass(frozen=True)
class GTPattern:
    signature: Signature
    rows: tuple

    def __init__(self, signature: Signature, rows: Sequence[Sequence]):
        rows = tuple(tuple(as_fraction(x) for x in row) for row in rows)
        N = signature.size
        if len(rows) != N or any(len(rows[N - p]) != p for p in range(1, N + 1)):
            raise MalformedPatternError(
                f"{signature} pattern needs rows of lengths {N}..1, "
                f"got {[len(r) for r in rows]}"
            )
        object.__setattr__(self, "signature", signature)
        object.__setattr__(self, "rows", rows)

    def row(self, p: int) -> tuple:
        return self.rows[self.signature.size - p]

    def label(self, r: int, p: int) -> Fraction:
        return self.rows[self.signature.size - p][r - 1]

    @property
    def top(self) -> Weight:
        sig = self.signature
        return Weight(sig, self.rows[0][: sig.m], self.rows[0][sig.m :])

    def shifted(self, r: int, p: int, step: int) -> "GTPattern":
        idx = self.signature.size - p
        row = list(self.rows[idx])
        row[r - 1] += step
        rows = list(self.rows)
        rows[idx] = tuple(row)
        return GTPattern(self.signature, rows)

    def sort_key(self) -> tuple:
        return tuple(x for row in self.rows for x in row)

    def to_json(self) -> list:
        return [[format_fraction(x) for x in row] for row in self.rows]

    def __str__(self) -> str:
        return " / ".join(",".join(format_fraction(x) for x in row) for row in self.rows)


@dataclass(frozen=True)
class PatternDelta:
    """Shift of label ``(r, p)`` by ``direction`` (+1 raise, -1 lower)."""

    r: int
    p: int
    direction: int = -1

    def inverse(self) -> "PatternDelta":
        return PatternDelta(self.r, self.p, -self.direction)


def check_theta(theta: int) -> int:
    if theta not in (1, 2):
        raise ValueError(f"theta must be 1 or 2, got {theta!r}")
    return theta


def _is_int(x: Fraction) -> bool:
    return x.denominator == 1


def row_weight(m: int, row: Sequence, p: int) -> Optional[Weight]:
    """Row ``p`` as a gl(m|p-m) weight, or ``None`` for the purely even levels."""
    if p <= m:
        return None
    return Weight(Signature(m, p - m), row[:m], row[m:])


def row_class(m: int, row: Sequence, p: int) -> Optional[UnitaryClass]:
    w = row_weight(m, row, p)
    return None if w is None else classify(w, check_dominant=False)


def row_admits(m: int, row: Sequence, p: int, theta: int) -> bool:
    """Dominance, plus type ``theta`` unitarity on the super levels."""
    ev = row[: min(p, m)]
    od = row[m:] if p > m else ()
    for seq in (ev, od):
        for a, b in zip(seq, seq[1:]):
            d = a - b
            if d < 0 or not _is_int(d):
                return False
    if p <= m:
        return True
    return row_class(m, row, p).admits(theta)


def gl_m1_pairing(m: int, upper: Sequence, i: int) -> Fraction:
    """``(L + rho, eps_i - delta_1)`` for the gl(m|1) weight ``upper`` (row m+1)."""
    return level_pairing(m, upper, i, 1)


def level_pairing(m: int, upper: Sequence, i: int, mu: int) -> Fraction:
    """``(L + rho, eps_i - delta_mu)`` for a row read as a gl(m|q) weight."""
    q = len(upper) - m
    r = rho(Signature(m, q))
    return upper[i - 1] + r.even[i - 1] + upper[m + mu - 1] + r.odd[mu - 1]


def _lowered_by_at_most_one(hi: Fraction, lo: Fraction) -> bool:
    d = hi - lo
    return d == 0 or d == 1


def _atypical_links(m: int, upper: Sequence, lower: Sequence, theta: int) -> bool:
    """Extra conditions that atypicality of ``upper`` imposes on ``lower``.

    Type 2: an even label ``i`` with ``(L + rho, eps_i - delta_1) = 0`` is
    frozen.  Type 1: if ``(L + rho, eps_m - delta_mu) = 0`` then lowering the
    last even label forces odd label ``mu - 1`` down to its lower bound; for
    ``mu = 1`` there is no such label and the even label is frozen.
    """
    if theta == 2:
        for i in range(1, m + 1):
            if lower[i - 1] != upper[i - 1] and level_pairing(m, upper, i, 1) == 0:
                return False
        return True
    if lower[m - 1] == upper[m - 1]:
        return True
    for mu in range(1, len(upper) - m + 1):
        if level_pairing(m, upper, m, mu) == 0:
            if mu == 1 or lower[m + mu - 2] != upper[m + mu - 1]:
                return False
    return True


def pair_ok(m: int, upper: Sequence, lower: Sequence, p: int, theta: int) -> bool:
    """Branching conditions between row ``p+1`` (``upper``) and row ``p`` (``lower``)."""
    if p >= m:
        for i in range(m):
            if not _lowered_by_at_most_one(upper[i], lower[i]):
                return False
        for mu in range(p - m):
            a, x, b = upper[m + mu], lower[m + mu], upper[m + mu + 1]
            if not (_is_int(a - x) and a >= x >= b):
                return False
        return _atypical_links(m, upper, lower, theta)
    for i in range(p):
        a, x, b = upper[i], lower[i], upper[i + 1]
        if not (_is_int(a - x) and a >= x >= b):
            return False
    return True


def validate(pat: GTPattern, theta: int) -> bool:
    """Full branching-rule check of a pattern for a type ``theta`` module."""
    check_theta(theta)
    m = pat.signature.m
    N = pat.signature.size
    for p in range(1, N + 1):
        if not row_admits(m, pat.row(p), p, theta):
            return False
    for p in range(1, N):
        if not pair_ok(m, pat.row(p + 1), pat.row(p), p, theta):
            return False
    return True


def _candidates(m: int, upper: tuple, p: int, theta: int) -> Iterator[tuple]:
    """All rows ``p`` that branch from ``upper`` (row ``p+1``)."""
    choices: list[list[Fraction]] = []
    if p >= m:
        for i in range(m):
            choices.append([upper[i], upper[i] - 1])
        for mu in range(p - m):
            a, b = upper[m + mu], upper[m + mu + 1]
            choices.append([a - t for t in range(int(a - b) + 1)])
    else:
        for i in range(p):
            a, b = upper[i], upper[i + 1]
            if b > a:
                return
            choices.append([a - t for t in range(int(a - b) + 1)])

    def rec(idx: int, acc: list):
        if idx == len(choices):
            yield tuple(acc)
            return
        for c in choices[idx]:
            acc.append(c)
            yield from rec(idx + 1, acc)
            acc.pop()

    for row in rec(0, []):
        if row_admits(m, row, p, theta) and pair_ok(m, upper, row, p, theta):
            yield row


def highest_pattern(top: Weight) -> GTPattern:
    """The pattern of the highest weight vector (each row is a truncation of the one above)."""
    sig = top.signature
    labels = top.labels
    rows = []
    for p in range(sig.size, 0, -1):
        rows.append(labels[:p])
    return GTPattern(sig, rows)


def enumerate_basis(top: Weight, theta: int, dim_cap: Optional[int] = None) -> list[GTPattern]:
    """All valid patterns with top row ``top``, sorted descending lexicographically."""
    check_theta(theta)
    sig = top.signature
    cap = default_dim_cap() if dim_cap is None else dim_cap
    m, N = sig.m, sig.size
    top_row = tuple(top.labels)
    if not row_admits(m, top_row, N, theta):
        raise ValueError(f"{top} is not a dominant type {theta} unitary highest weight")
    out: list[tuple] = []

    def rec(rows: list):
        p = N - len(rows)
        if p == 0:
            out.append(tuple(rows))
            if len(out) > cap:
                raise DimensionCapExceeded(f"module dimension exceeds cap {cap}")
            return
        for row in _candidates(m, rows[-1], p, theta):
            rows.append(row)
            rec(rows)
            rows.pop()

    rec([top_row])
    pats = [GTPattern(sig, rows) for rows in out]
    pats.sort(key=GTPattern.sort_key, reverse=True)
    return pats


def weight_of(pat: GTPattern) -> Weight:
    """Eigenvalues of ``E_pp``: row sum ``p`` minus row sum ``p-1``."""
    sig = pat.signature
    sums = [Fraction(0)] + [sum(pat.row(p), Fraction(0)) for p in range(1, sig.size + 1)]
    eig = [sums[p] - sums[p - 1] for p in range(1, sig.size + 1)]
    return Weight(sig, eig[: sig.m], eig[sig.m :])


def apply_delta(pat: GTPattern, delta: PatternDelta, theta: int) -> Optional[GTPattern]:
    """Shift one label; ``None`` stands for the zero vector when branching fails."""
    sig = pat.signature
    m, N = sig.m, sig.size
    p, r = delta.p, delta.r
    if not 1 <= p < N or not 1 <= r <= p:
        return None
    new = pat.shifted(r, p, delta.direction)
    if not row_admits(m, new.row(p), p, theta):
        return None
    if not pair_ok(m, new.row(p + 1), new.row(p), p, theta):
        return None
    if p > 1 and not pair_ok(m, new.row(p), new.row(p - 1), p - 1, theta):
        return None
    return new


def level_of_pattern(pat: GTPattern) -> int:
    """Number of odd lowerings separating the pattern from the highest weight."""
    nu = weight_of(pat)
    lam = pat.top
    lev = sum(nu.odd, Fraction(0)) - sum(lam.odd, Fraction(0))
    if lev.denominator != 1 or lev < 0:
        raise MalformedPatternError(f"pattern {pat} has non-integral level {lev}")
    return int(lev)


def grading_of(pat: GTPattern) -> int:
    return level_of_pattern(pat) % 2
