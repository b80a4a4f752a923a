"""Weights of gl(m|n), the graded bilinear form and unitarity classification.

A weight is stored by its coordinates in the basis ``eps_1..eps_m`` (even)
and ``delta_1..delta_n`` (odd).  The form pairs ``(eps_i, eps_j) = [i == j]``
and ``(delta_mu, delta_nu) = -[mu == nu]``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .radicals import as_fraction, format_fraction, parse_fraction

__all__ = [
    "Signature",
    "Weight",
    "UnitaryKind",
    "UnitaryClass",
    "ClassificationError",
    "DecompositionError",
    "bilinear_form",
    "rho",
    "is_dominant",
    "classify",
    "type1_pairing",
    "type2_pairing",
    "unit_even",
    "unit_odd",
    "trivial_weight",
    "shift_trivial",
    "extended_simple_roots",
    "graded_fundamental_weights",
    "fundamental_expansion",
    "decompose_type2",
    "lemma_gamma_allowed",
    "parse_weight",
    "parse_signature",
]


class ClassificationError(ValueError):
    """Raised for weights outside the domain of a classification routine."""


class DecompositionError(ValueError):
    """Raised when a type 2 weight admits no building-block decomposition."""


@dataclass(frozen=True)
class Signature:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"gl(m|n) needs m, n >= 1, got ({self.m}, {self.n})")

    @property
    def size(self) -> int:
        return self.m + self.n

    def parity(self, index: int) -> int:
        """Grading of the 1-based ungraded index."""
        return 0 if index <= self.m else 1

    def __str__(self) -> str:
        return f"gl({self.m}|{self.n})"


@dataclass(frozen=True)
class Weight:
    signature: Signature
    even: tuple
    odd: tuple

    def __init__(self, signature: Signature, even: Iterable, odd: Iterable):
        even = tuple(as_fraction(x) for x in even)
        odd = tuple(as_fraction(x) for x in odd)
        if len(even) != signature.m or len(odd) != signature.n:
            raise ValueError(
                f"{signature} weight needs {signature.m}|{signature.n} labels, "
                f"got {len(even)}|{len(odd)}"
            )
        object.__setattr__(self, "signature", signature)
        object.__setattr__(self, "even", even)
        object.__setattr__(self, "odd", odd)

    @classmethod
    def from_labels(cls, m: int, n: int, labels: Sequence) -> "Weight":
        return cls(Signature(m, n), labels[:m], labels[m:])

    @property
    def labels(self) -> tuple:
        return self.even + self.odd

    def _check(self, other: "Weight"):
        if not isinstance(other, Weight):
            raise TypeError(f"expected Weight, got {type(other).__name__}")
        if other.signature != self.signature:
            raise ValueError(f"signature mismatch: {self.signature} vs {other.signature}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(
            self.signature,
            [a + b for a, b in zip(self.even, other.even)],
            [a + b for a, b in zip(self.odd, other.odd)],
        )

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def __neg__(self) -> "Weight":
        return Weight(self.signature, [-a for a in self.even], [-a for a in self.odd])

    def __mul__(self, scalar) -> "Weight":
        s = as_fraction(scalar)
        return Weight(self.signature, [s * a for a in self.even], [s * a for a in self.odd])

    __rmul__ = __mul__

    def to_text(self) -> str:
        ev = ",".join(format_fraction(x) for x in self.even)
        od = ",".join(format_fraction(x) for x in self.odd)
        return f"{ev}|{od}"

    def to_json(self) -> dict:
        return {
            "even": [format_fraction(x) for x in self.even],
            "odd": [format_fraction(x) for x in self.odd],
        }

    def __str__(self) -> str:
        return f"({self.to_text()})"

    def __repr__(self) -> str:
        return f"Weight({self.signature.m},{self.signature.n}: {self.to_text()})"


def parse_signature(text: str) -> Signature:
    try:
        m, n = (int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"malformed algebra {text!r}; expected 'm,n'") from None
    return Signature(m, n)


def parse_weight(text: str, signature: Signature) -> Weight:
    """Parse ``"a1,...,am|b1,...,bn"``; entries are integers or ``p/q``."""
    if text.count("|") != 1:
        raise ValueError(f"malformed weight {text!r}; expected 'a1,..,am|b1,..,bn'")
    left, right = text.split("|")
    even = [parse_fraction(t) for t in left.split(",")] if left.strip() else []
    odd = [parse_fraction(t) for t in right.split(",")] if right.strip() else []
    return Weight(signature, even, odd)


def unit_even(sig: Signature, i: int) -> Weight:
    """``eps_i`` (1-based)."""
    return Weight(sig, [1 if j == i else 0 for j in range(1, sig.m + 1)], [0] * sig.n)


def unit_odd(sig: Signature, mu: int) -> Weight:
    """``delta_mu`` (1-based)."""
    return Weight(sig, [0] * sig.m, [1 if j == mu else 0 for j in range(1, sig.n + 1)])


def bilinear_form(a: Weight, b: Weight) -> Fraction:
    a._check(b)
    return sum((x * y for x, y in zip(a.even, b.even)), Fraction(0)) - sum(
        (x * y for x, y in zip(a.odd, b.odd)), Fraction(0)
    )


def rho(sig: Signature) -> Weight:
    """Graded half-sum of positive roots (even roots minus odd roots)."""
    m, n = sig.m, sig.n
    return Weight(
        sig,
        [Fraction(m - n - 2 * j + 1, 2) for j in range(1, m + 1)],
        [Fraction(m + n - 2 * nu + 1, 2) for nu in range(1, n + 1)],
    )


def _nonneg_int(x: Fraction) -> bool:
    return x.denominator == 1 and x >= 0


def is_dominant(w: Weight) -> bool:
    ev, od = w.even, w.odd
    return all(_nonneg_int(ev[i] - ev[i + 1]) for i in range(len(ev) - 1)) and all(
        _nonneg_int(od[i] - od[i + 1]) for i in range(len(od) - 1)
    )


def type1_pairing(w: Weight, mu: int) -> Fraction:
    """``(w + rho, eps_m - delta_mu)``."""
    r = rho(w.signature)
    m = w.signature.m
    return (w.even[m - 1] + r.even[m - 1]) + (w.odd[mu - 1] + r.odd[mu - 1])


def type2_pairing(w: Weight, k: int) -> Fraction:
    """``(w + rho, eps_k - delta_1)``."""
    r = rho(w.signature)
    return (w.even[k - 1] + r.even[k - 1]) + (w.odd[0] + r.odd[0])


class UnitaryKind(enum.Enum):
    TYPE1_TYPICAL = "Type1Typical"
    TYPE1_ATYPICAL = "Type1Atypical"
    TYPE2_TYPICAL = "Type2Typical"
    TYPE2_ATYPICAL = "Type2Atypical"
    BOTH = "BothTypes"
    NOT_UNITARY = "NotUnitary"


@dataclass(frozen=True)
class UnitaryClass:
    """Outcome of :func:`classify`.

    ``mu`` is the type 1 atypicality index and ``k`` the type 2 one; both are
    ``None`` on the side that is typical or not unitary.
    """

    kind: UnitaryKind
    mu: Optional[int] = None
    k: Optional[int] = None

    @property
    def is_type1(self) -> bool:
        return self.kind in (UnitaryKind.TYPE1_TYPICAL, UnitaryKind.TYPE1_ATYPICAL, UnitaryKind.BOTH)

    @property
    def is_type2(self) -> bool:
        return self.kind in (UnitaryKind.TYPE2_TYPICAL, UnitaryKind.TYPE2_ATYPICAL, UnitaryKind.BOTH)

    @property
    def is_unitary(self) -> bool:
        return self.kind is not UnitaryKind.NOT_UNITARY

    def admits(self, theta: int) -> bool:
        if theta == 1:
            return self.is_type1
        if theta == 2:
            return self.is_type2
        raise ValueError(f"theta must be 1 or 2, got {theta!r}")

    def atypical(self, theta: int) -> bool:
        return (self.mu if theta == 1 else self.k) is not None

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "mu": self.mu, "k": self.k}

    def __str__(self) -> str:
        extra = []
        if self.mu is not None:
            extra.append(f"mu={self.mu}")
        if self.k is not None:
            extra.append(f"k={self.k}")
        return self.kind.value + (f"({', '.join(extra)})" if extra else "")


def _type1(w: Weight) -> tuple[bool, Optional[int]]:
    n = w.signature.n
    if type1_pairing(w, n) > 0:
        return True, None
    # (w+rho, eps_m - delta_mu) strictly decreases in mu, so at most one hit.
    for mu in range(1, n + 1):
        if type1_pairing(w, mu) == 0 and w.odd[mu - 1] == w.odd[n - 1]:
            return True, mu
    return False, None


def _type2(w: Weight) -> tuple[bool, Optional[int]]:
    m = w.signature.m
    if type2_pairing(w, 1) < 0:
        return True, None
    # Strictly decreasing in k as well; scan from the top so the largest wins.
    for k in range(m, 0, -1):
        if type2_pairing(w, k) == 0 and w.even[k - 1] == w.even[0]:
            return True, k
    return False, None


def classify(w: Weight, *, check_dominant: bool = True) -> UnitaryClass:
    """Classify a dominant real weight as type 1 and/or type 2 unitary."""
    if check_dominant and not is_dominant(w):
        raise ClassificationError(f"weight {w} is not dominant")
    t1, mu = _type1(w)
    t2, k = _type2(w)
    if t1 and t2:
        return UnitaryClass(UnitaryKind.BOTH, mu=mu, k=k)
    if t1:
        return UnitaryClass(UnitaryKind.TYPE1_ATYPICAL if mu else UnitaryKind.TYPE1_TYPICAL, mu=mu)
    if t2:
        return UnitaryClass(UnitaryKind.TYPE2_ATYPICAL if k else UnitaryKind.TYPE2_TYPICAL, k=k)
    return UnitaryClass(UnitaryKind.NOT_UNITARY)


def trivial_weight(sig: Signature) -> Weight:
    """The one-dimensional weight ``(-1,...,-1 | 1,...,1)``."""
    return Weight(sig, [-1] * sig.m, [1] * sig.n)


def shift_trivial(w: Weight, omega) -> Weight:
    return w + trivial_weight(w.signature) * as_fraction(omega)


def extended_simple_roots(sig: Signature) -> tuple[list[Weight], list[Weight]]:
    """Even and odd members of the type 2 extended simple root system.

    Returns ``([phi_1, ..., phi_m], [phi_1bar, ..., phi_nbar])`` where
    ``phi_1 = -eps_1``, ``phi_i = eps_{i-1} - eps_i``,
    ``phi_1bar = eps_m - delta_1`` and ``phi_mu = delta_{mu-1} - delta_mu``.
    """
    even = [-unit_even(sig, 1)] + [unit_even(sig, i - 1) - unit_even(sig, i) for i in range(2, sig.m + 1)]
    odd = [unit_even(sig, sig.m) - unit_odd(sig, 1)] + [
        unit_odd(sig, mu - 1) - unit_odd(sig, mu) for mu in range(2, sig.n + 1)
    ]
    return even, odd


def graded_fundamental_weights(sig: Signature) -> tuple[list[Weight], list[Weight]]:
    """Weights dual to :func:`extended_simple_roots` in the graded sense."""
    m, n = sig.m, sig.n
    even = [Weight(sig, [0] * (i - 1) + [-1] * (m - i + 1), [1] * n) for i in range(1, m + 1)]
    odd = [Weight(sig, [0] * m, [0] * (mu - 1) + [-1] * (n - mu + 1)) for mu in range(1, n + 1)]
    return even, odd


def lemma_gamma_allowed(gamma: Fraction, m: int) -> bool:
    """``V(gamma * epsbar)`` is type 2 unitary iff gamma is 0..m-1 or exceeds m-1."""
    gamma = as_fraction(gamma)
    if gamma > m - 1:
        return True
    return gamma.denominator == 1 and 0 <= gamma <= m - 1


def fundamental_expansion(w: Weight) -> tuple[Weight, Fraction, Fraction]:
    """Raw linear expansion ``w = A + c * epsbar + omega * delta``.

    ``A`` collects the terms along the modified fundamental weights
    ``Omega_i = omega_i + (m-i+1) epsbar`` (i >= 2) and ``Omega_mu``
    (mu >= 2); every coefficient comes from pairing ``w`` with an extended
    simple root, so the map is linear.  Note that ``Omega_i`` itself is not
    type 2 unitary; :func:`decompose_type2` moves one more ``epsbar`` into it.
    """
    sig = w.signature
    m, n = sig.m, sig.n
    phi_even, phi_odd = extended_simple_roots(sig)
    om_even, om_odd = graded_fundamental_weights(sig)
    epsbar = om_odd[0]
    A = Weight(sig, [0] * m, [0] * n)
    for i in range(2, m + 1):
        big_omega = om_even[i - 1] + epsbar * (m - i + 1)
        A = A + big_omega * bilinear_form(w, phi_even[i - 1])
    for mu in range(2, n + 1):
        A = A - om_odd[mu - 1] * bilinear_form(w, phi_odd[mu - 1])
    c = -(
        bilinear_form(w, phi_odd[0])
        + sum((Fraction(m - i + 1) * bilinear_form(w, phi_even[i - 1]) for i in range(2, m + 1)), Fraction(0))
    )
    omega = bilinear_form(w, phi_even[0])
    return A, c, omega


def decompose_type2(w: Weight) -> tuple[Weight, Fraction, Fraction]:
    """Split a type 2 unitary weight into ``(Lambda0, gamma, omega)``.

    ``w = Lambda0 + gamma * epsbar + omega * delta`` with ``Lambda0`` an
    integral type 2 (contravariant tensor) weight and ``gamma`` in the set
    allowed by :func:`lemma_gamma_allowed`.  The expansion is the raw one
    with ``Omega_i`` replaced by ``Omega_i + epsbar``, used as is when its
    ``epsbar`` coefficient is admissible.  A negative integral
    coefficient is folded into ``Lambda0``; a non-integral coefficient below
    ``m - 1`` is raised by whole units while ``Lambda0`` stays type 2.
    """
    cls = classify(w)
    if not cls.is_type2:
        raise ClassificationError(f"{w} is not type 2 unitary ({cls})")
    sig = w.signature
    m = sig.m
    A, c, omega = fundamental_expansion(w)
    epsbar = graded_fundamental_weights(sig)[1][0]
    # omega_i + (m-i+2) epsbar is the smallest epsbar shift that is type 2
    # (atypical at k = i-1), so each Omega_i borrows one epsbar from c.
    phi_even = extended_simple_roots(sig)[0]
    borrow = sum((bilinear_form(w, phi_even[i - 1]) for i in range(2, m + 1)), Fraction(0))
    A, c = A + epsbar * borrow, c - borrow
    if lemma_gamma_allowed(c, m):
        return A, c, omega
    if c.denominator == 1:
        # c < 0: the whole epsbar part is integral and joins Lambda0.
        return A + epsbar * c, Fraction(0), omega
    gamma = c
    while gamma <= m - 1:
        gamma += 1
    base = A + epsbar * (c - gamma)
    if not classify(base).is_type2:
        raise DecompositionError(
            f"{w}: no contravariant tensor Lambda0 with admissible gamma "
            f"(epsbar coefficient {format_fraction(c)})"
        )
    return base, gamma, omega
