"""Exact numbers of the form ``sum_i c_i * sqrt(d_i)``.

Coefficients are :class:`fractions.Fraction` and every radicand ``d_i`` is a
squarefree positive integer.  Square roots of distinct squarefree integers
are linearly independent over the rationals, so the term map is a canonical
form and equality is decided by comparing term maps.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

__all__ = [
    "RadicalSum",
    "NegativeRadicandError",
    "as_fraction",
    "format_fraction",
    "parse_fraction",
    "square_part",
    "sqrt_of_rational",
    "ZERO",
    "ONE",
]

#: Trial division stops at this prime bound; see :func:`square_part`.
TRIAL_DIVISION_BOUND = 10**6

Number = Union[int, Fraction, "RadicalSum"]


class NegativeRadicandError(ValueError):
    """Raised when the square root of a negative rational is requested."""


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def parse_fraction(text: str) -> Fraction:
    """Parse ``"n"``, ``"p/q"`` or a terminating decimal such as ``"-1.5"``."""
    text = text.strip()
    if not text:
        raise ValueError("empty rational literal")
    try:
        return Fraction(text)
    except ValueError:
        raise ValueError(f"malformed rational literal {text!r}") from None


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def square_part(n: int, bound: int = TRIAL_DIVISION_BOUND) -> tuple[int, int]:
    """Split a positive integer as ``n = s**2 * d`` with ``d`` squarefree.

    Trial division runs up to ``bound``; the remaining cofactor has no prime
    factor below the bound, so if it is smaller than ``bound**3`` it is a
    prime, a product of two distinct primes or a prime square, and a
    perfect-square test finishes the job.
    """
    if n <= 0:
        raise ValueError("square_part expects a positive integer")
    s, d = 1, 1
    f = 2
    while f * f <= n and f <= bound:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            s *= f ** (e // 2)
            if e % 2:
                d *= f
        f += 1 if f == 2 else 2
    if n > 1:
        r = math.isqrt(n)
        if r * r == n:
            s *= r
        elif n >= bound**3:
            raise ValueError(
                f"cofactor {n} is too large to certify squarefree "
                f"with trial division bound {bound}"
            )
        else:
            d *= n
    return s, d


def sqrt_of_rational(x, sign: int = 1) -> "RadicalSum":
    """Return ``sign * sqrt(x)`` as a canonical :class:`RadicalSum`.

    >>> sqrt_of_rational(Fraction(8, 9))
    RadicalSum('2/3*sqrt(2)')
    """
    x = as_fraction(x)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if x < 0:
        raise NegativeRadicandError(f"negative radicand {format_fraction(x)}")
    if x == 0:
        return ZERO
    a, b = x.numerator, x.denominator
    s, d = square_part(a * b)
    return RadicalSum({d: Fraction(sign * s, b)})


class RadicalSum:
    """Immutable finite sum of rational multiples of square roots."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, object] | Iterable[tuple[int, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for d, c in items:
            d = int(d)
            c = as_fraction(c)
            if d < 1:
                raise ValueError(f"radicand must be positive, got {d}")
            if c == 0:
                continue
            s, core = square_part(d)
            if s != 1:
                c = c * s
            acc[core] = acc.get(core, Fraction(0)) + c
        self._terms = tuple(sorted((d, c) for d, c in acc.items() if c != 0))
        self._hash = None

    @classmethod
    def _from_canonical(cls, items: dict[int, Fraction]) -> "RadicalSum":
        obj = cls.__new__(cls)
        obj._terms = tuple(sorted((d, c) for d, c in items.items() if c != 0))
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, x) -> "RadicalSum":
        x = as_fraction(x)
        return cls._from_canonical({1: x}) if x else ZERO

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(d == 1 for d, _ in self._terms)

    def rational_part(self) -> Fraction:
        for d, c in self._terms:
            if d == 1:
                return c
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @staticmethod
    def _coerce(other) -> "RadicalSum | None":
        if isinstance(other, RadicalSum):
            return other
        if isinstance(other, (int, Fraction)):
            return RadicalSum.rational(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for d, c in other._terms:
            acc[d] = acc.get(d, Fraction(0)) + c
        return RadicalSum._from_canonical(acc)

    __radd__ = __add__

    def __neg__(self):
        return RadicalSum._from_canonical({d: -c for d, c in self._terms})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            return RadicalSum._from_canonical({d: c * other for d, c in self._terms})
        if not isinstance(other, RadicalSum):
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for d1, c1 in self._terms:
            for d2, c2 in other._terms:
                g = math.gcd(d1, d2)
                d = (d1 // g) * (d2 // g)
                acc[d] = acc.get(d, Fraction(0)) + c1 * c2 * g
        return RadicalSum._from_canonical(acc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # Only division by a rational scalar is supported.
        if isinstance(other, RadicalSum):
            if not other.is_rational():
                return NotImplemented
            other = other.rational_part()
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("RadicalSum division by zero")
        return RadicalSum._from_canonical({d: c / other for d, c in self._terms})

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __float__(self) -> float:
        return self.to_float()

    def to_float(self) -> float:
        return math.fsum(float(c) * math.sqrt(d) for d, c in self._terms)

    def sign(self) -> int:
        """Exact sign for single-term values, float-guided otherwise."""
        if not self._terms:
            return 0
        if len(self._terms) == 1:
            return 1 if self._terms[0][1] > 0 else -1
        return 1 if self.to_float() > 0 else -1

    def square(self) -> "RadicalSum":
        return self * self

    def to_json(self) -> list[dict]:
        return [{"coeff": format_fraction(c), "radicand": d} for d, c in self._terms]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "RadicalSum":
        return cls((int(t["radicand"]), parse_fraction(str(t["coeff"]))) for t in data)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for d, c in self._terms:
            if d == 1:
                parts.append(format_fraction(c))
            elif c == 1:
                parts.append(f"sqrt({d})")
            elif c == -1:
                parts.append(f"-sqrt({d})")
            else:
                parts.append(f"{format_fraction(c)}*sqrt({d})")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"RadicalSum({str(self)!r})"


ZERO = RadicalSum._from_canonical({})
ONE = RadicalSum._from_canonical({1: Fraction(1)})
