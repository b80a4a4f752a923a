"""Characteristic roots and invariant eigenvalues along the subalgebra chain.

Matrix-element formulas are products of linear expressions in the roots.
They are kept symbolic (:class:`Factor`, :class:`FactorProduct`) so that
identical numerator and denominator factors cancel before any label is
substituted, which removes coincident-root 0/0 configurations.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .patterns import GTPattern
from .radicals import format_fraction

__all__ = [
    "CharacteristicRoots",
    "DegenerateConfigurationError",
    "Factor",
    "FactorProduct",
    "alpha",
    "alpha_bar",
    "level_signature",
    "root_symbol",
    "roots_at_level",
    "root_values",
    "root_slopes",
    "c_factors",
    "delta_factors",
    "c_eigenvalue",
    "delta_eigenvalue",
]


class DegenerateConfigurationError(ZeroDivisionError):
    """A denominator factor vanishes after cancellation."""


def level_signature(m: int, p: int) -> tuple[int, int]:
    """Even and odd sizes ``(m', n')`` of the level-``p`` subalgebra."""
    return min(p, m), max(p - m, 0)


def alpha(m: int, row, k: int, p: int) -> Fraction:
    mp, np_ = level_signature(m, p)
    sgn = -1 if k > m else 1
    return sgn * (row[k - 1] + mp - k) - np_


def alpha_bar(m: int, row, k: int, p: int) -> Fraction:
    mp, _ = level_signature(m, p)
    sgn = -1 if k > m else 1
    return mp - sgn * (row[k - 1] + mp + 1 - k)


@dataclass(frozen=True)
class CharacteristicRoots:
    level: int
    even_roots: tuple
    odd_roots: tuple
    barred_even: tuple
    barred_odd: tuple

    @property
    def roots(self) -> tuple:
        return self.even_roots + self.odd_roots

    @property
    def barred(self) -> tuple:
        return self.barred_even + self.barred_odd


def roots_at_level(pat: GTPattern, p: int) -> CharacteristicRoots:
    sig = pat.signature
    if not 1 <= p <= sig.size:
        raise ValueError(f"level {p} out of range 1..{sig.size}")
    m = sig.m
    row = pat.row(p)
    mp = min(p, m)
    a = [alpha(m, row, k, p) for k in range(1, p + 1)]
    b = [alpha_bar(m, row, k, p) for k in range(1, p + 1)]
    return CharacteristicRoots(p, tuple(a[:mp]), tuple(a[mp:]), tuple(b[:mp]), tuple(b[mp:]))


def root_symbol(k: int, p: int, barred: bool = False) -> tuple:
    return ("abar" if barred else "a", k, p)


def root_slopes(m: int, levels: Iterable[int]) -> dict:
    """Rate of change of each root when every odd label moves by ``t``."""
    out = {}
    for p in levels:
        for k in range(m + 1, p + 1):
            out[root_symbol(k, p)] = -1
            out[root_symbol(k, p, True)] = 1
    return out


def root_values(pat: GTPattern, levels: Optional[Iterable[int]] = None) -> dict:
    """Map every root symbol at the given levels to its value on ``pat``."""
    sig = pat.signature
    levels = range(1, sig.size + 1) if levels is None else levels
    out = {}
    for p in levels:
        if not 1 <= p <= sig.size:
            continue
        row = pat.row(p)
        for k in range(1, p + 1):
            out[root_symbol(k, p)] = alpha(sig.m, row, k, p)
            out[root_symbol(k, p, True)] = alpha_bar(sig.m, row, k, p)
    return out


@dataclass(frozen=True)
class Factor:
    """Linear expression ``sum coeff * symbol + const`` in canonical sign.

    The leading (smallest) symbol always carries a positive coefficient;
    :meth:`make` returns the sign pulled out to reach that form.
    """

    coeffs: tuple
    const: Fraction

    @staticmethod
    def make(coeffs: Mapping, const=0) -> tuple[int, "Factor"]:
        items = tuple(sorted((s, Fraction(c)) for s, c in coeffs.items() if c != 0))
        const = Fraction(const)
        if items and items[0][1] < 0:
            items = tuple((s, -c) for s, c in items)
            return -1, Factor(items, -const)
        if not items and const < 0:
            return -1, Factor((), -const)
        return 1, Factor(items, const)

    def evaluate(self, values: Mapping) -> Fraction:
        return sum((c * values[s] for s, c in self.coeffs), self.const)

    def slope(self, slopes: Mapping) -> Fraction:
        return sum((c * slopes.get(s, 0) for s, c in self.coeffs), Fraction(0))

    def substitute(self, shifts: Mapping) -> "Factor":
        """Replace ``symbol`` by ``symbol + shifts[symbol]``."""
        const = self.const + sum((c * shifts.get(s, 0) for s, c in self.coeffs), Fraction(0))
        return Factor(self.coeffs, const)

    def __str__(self) -> str:
        parts = []
        for (kind, k, p), c in self.coeffs:
            name = f"{'abar' if kind == 'abar' else 'a'}[{k},{p}]"
            if c == 1:
                parts.append(f"+{name}")
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{'+' if c > 0 else '-'}{format_fraction(abs(c))}*{name}")
        if self.const:
            parts.append(f"{'+' if self.const > 0 else '-'}{format_fraction(abs(self.const))}")
        s = "".join(parts) or "0"
        return "(" + s.lstrip("+") + ")"


def diff(a: tuple, b: tuple, const=0) -> tuple[int, Factor]:
    """Factor for ``a - b + const`` where ``a``, ``b`` are root symbols."""
    coeffs: dict = {}
    coeffs[a] = coeffs.get(a, 0) + 1
    coeffs[b] = coeffs.get(b, 0) - 1
    return Factor.make(coeffs, const)


def _side(c: Counter, values: Mapping, slopes: Mapping, is_den: bool) -> tuple:
    # (leading coefficient, order of vanishing in t); order None = identically 0
    val, order = Fraction(1), 0
    for f, e in c.items():
        v = f.evaluate(values)
        if v == 0:
            v = f.slope(slopes)
            if v == 0:
                if is_den:
                    raise DegenerateConfigurationError(f"denominator factor {f} vanishes")
                return Fraction(0), None
            order += e
        val *= v**e
    return val, order


@dataclass
class FactorProduct:
    """``sign * prod(num) / prod(den)`` as multisets of canonical factors."""

    sign: int = 1
    num: Counter = field(default_factory=Counter)
    den: Counter = field(default_factory=Counter)

    def mul(self, signed: tuple[int, Factor], power: int = 1) -> "FactorProduct":
        s, f = signed
        if power > 0:
            self.num[f] += power
        else:
            self.den[f] += -power
        if s < 0 and power % 2:
            self.sign = -self.sign
        return self

    def times(self, other: "FactorProduct") -> "FactorProduct":
        return FactorProduct(self.sign * other.sign, self.num + other.num, self.den + other.den)

    def cancelled(self) -> "FactorProduct":
        common = self.num & self.den
        return FactorProduct(self.sign, self.num - common, self.den - common)

    def substitute(self, shifts: Mapping) -> "FactorProduct":
        num: Counter = Counter()
        den: Counter = Counter()
        for f, e in self.num.items():
            num[f.substitute(shifts)] += e
        for f, e in self.den.items():
            den[f.substitute(shifts)] += e
        return FactorProduct(self.sign, num, den)

    def evaluate(self, values: Mapping, slopes: Optional[Mapping] = None) -> Fraction:
        """Cancel symbolically, then substitute.

        With ``slopes`` every symbol ``x`` is read as ``x + slopes[x] * t``
        and the value is the limit ``t -> 0``: a factor vanishing at ``t = 0``
        contributes its slope and one order of ``t``, so a zero in the
        numerator can balance a zero in the denominator.  Without slopes any
        zero numerator factor gives 0 and any zero denominator factor raises.
        """
        red = self.cancelled()
        slopes = slopes or {}
        top, ntop = _side(red.num, values, slopes, False)
        if ntop is None:
            return Fraction(0)
        bot, nbot = _side(red.den, values, slopes, True)
        if ntop > nbot:
            return Fraction(0)
        if ntop < nbot:
            raise DegenerateConfigurationError(f"pole of order {nbot - ntop} in {self}")
        return red.sign * top / bot

    def __str__(self) -> str:
        red = self.cancelled()

        def side(c: Counter) -> str:
            if not c:
                return "1"
            return "".join(str(f) + (f"^{e}" if e > 1 else "") for f, e in sorted(c.items(), key=str))

        sgn = "-" if red.sign < 0 else ""
        return f"{sgn}{side(red.num)} / {side(red.den)}"


def _odd_slots(m: int, p: int) -> range:
    return range(m + 1, p + 1)


def c_factors(m: int, r: int, p: int) -> FactorProduct:
    """Symbolic eigenvalue of ``c_{r,p}`` on a gl(m|p-m) level (``p > m``)."""
    A = lambda k, q: root_symbol(k, q)  # noqa: E731
    fp = FactorProduct()
    for k in range(1, m + 1):
        if k == r:
            continue
        fp.mul(diff(A(r, p), A(k, p), -1))
        fp.mul(diff(A(r, p), A(k, p - 1)), -1)
    for nu in _odd_slots(m, p):
        if nu != r:
            fp.mul(diff(A(r, p), A(nu, p)), -1)
    for nu in _odd_slots(m, p - 1):
        fp.mul(diff(A(r, p), A(nu, p - 1), 1))
    return fp


def delta_factors(m: int, r: int, p: int) -> FactorProduct:
    """Symbolic eigenvalue of ``delta_{r,p}`` on a gl(m|p-m) level (``p > m``)."""
    A = lambda k, q: root_symbol(k, q)  # noqa: E731
    fp = FactorProduct()
    if r > m:
        fp.sign = -1
    for k in range(1, m + 1):
        if k == r:
            continue
        fp.mul(diff(A(k, p), A(r, p)))
        fp.mul(diff(A(k, p + 1), A(r, p), 1), -1)
    for nu in _odd_slots(m, p):
        if nu != r:
            fp.mul(diff(A(nu, p), A(r, p), -1), -1)
    for nu in _odd_slots(m, p + 1):
        fp.mul(diff(A(nu, p + 1), A(r, p)))
    return fp


def _check_invariant_level(pat: GTPattern, p: int, r: int):
    sig = pat.signature
    if not sig.m < p < sig.size:
        raise ValueError(f"invariant eigenvalues need m < p < m+n, got p={p}")
    if not 1 <= r <= p:
        raise ValueError(f"slot {r} out of range for level {p}")


def c_eigenvalue(pat: GTPattern, p: int, r: int) -> Fraction:
    _check_invariant_level(pat, p, r)
    return c_factors(pat.signature.m, r, p).evaluate(root_values(pat, (p - 1, p, p + 1)))


def delta_eigenvalue(pat: GTPattern, p: int, r: int) -> Fraction:
    _check_invariant_level(pat, p, r)
    return delta_factors(pat.signature.m, r, p).evaluate(root_values(pat, (p - 1, p, p + 1)))
