"""Highest weights of dual modules.

For a type 1 weight the dual highest weight comes in closed form from the
minimal Z-graded component.  For either type it can also be found by brute
force: enumerate the basis, locate the lowest weight in the positive-root
order and negate it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .patterns import enumerate_basis, level_of_pattern, weight_of
from .weights import ClassificationError, Weight, classify, unit_even, unit_odd

__all__ = [
    "DualityData",
    "DualityError",
    "dual_data_type1",
    "tau_reverse",
    "lowest_weight",
    "dual_weight_via_basis",
    "dual_weight",
    "in_positive_cone",
    "level_of_pattern",
    "level_histogram",
    "weight_multiset",
]


class DualityError(RuntimeError):
    """The weight set of a module has no unique lowest element."""


@dataclass(frozen=True)
class DualityData:
    mu: int
    mu_seq: tuple
    lambda_bar: Weight
    lambda_minus: Weight
    lambda_star: Weight
    d_lambda: int

    def to_json(self) -> dict:
        return {
            "mu": self.mu,
            "mu_seq": list(self.mu_seq),
            "lambda_bar": self.lambda_bar.to_json(),
            "lambda_minus": self.lambda_minus.to_json(),
            "lambda_star": self.lambda_star.to_json(),
            "d_lambda": self.d_lambda,
        }


def tau_reverse(w: Weight) -> Weight:
    """Longest even Weyl element: reverse the even labels and the odd labels."""
    return Weight(w.signature, tuple(reversed(w.even)), tuple(reversed(w.odd)))


def dual_data_type1(w: Weight) -> DualityData:
    """Closed-form dual data of a type 1 weight.

    ``mu_i = min(mu - 1 + (L, eps_i - eps_m), n)``, where ``mu`` is the
    atypicality index (``n + 1`` when typical), and the minimal component is
    ``L - sum_i sum_{nu <= mu_i} (eps_i - delta_nu)``.
    """
    cls = classify(w)
    if not cls.is_type1:
        raise ClassificationError(f"{w} is not type 1 unitary ({cls})")
    sig = w.signature
    m, n = sig.m, sig.n
    mu = cls.mu if cls.mu is not None else n + 1
    seq = []
    for i in range(m):
        x = mu - 1 + w.even[i] - w.even[m - 1]
        if x.denominator != 1:
            raise ClassificationError(f"non-integral mu_{i + 1} = {x}")
        seq.append(min(int(x), n))
    bar = w
    for i, mi in enumerate(seq, start=1):
        for nu in range(1, mi + 1):
            bar = bar - (unit_even(sig, i) - unit_odd(sig, nu))
    minus = tau_reverse(bar)
    return DualityData(mu, tuple(seq), bar, minus, -minus, sum(seq))


def in_positive_cone(diff: Weight) -> bool:
    """Is ``diff`` a nonnegative integer combination of positive roots?

    The positive roots are ``e_a - e_b`` for ``a < b`` in the combined order
    ``eps_1..eps_m, delta_1..delta_n``, so this holds exactly when the
    coordinate total vanishes and every prefix sum is a nonnegative integer.
    """
    total = Fraction(0)
    for x in diff.labels:
        total += x
        if total.denominator != 1 or total < 0:
            return False
    return total == 0


def lowest_weight(weights) -> Weight:
    distinct = sorted(set(weights), key=lambda w: w.labels)
    low = [v for v in distinct if all(in_positive_cone(u - v) for u in distinct)]
    if len(low) != 1:
        raise DualityError(f"expected a unique lowest weight, found {len(low)}")
    return low[0]


def dual_weight_via_basis(w: Weight, theta: int, dim_cap: Optional[int] = None) -> Weight:
    basis = enumerate_basis(w, theta, dim_cap)
    return -lowest_weight(weight_of(b) for b in basis)


def dual_weight(w: Weight, theta: int, dim_cap: Optional[int] = None) -> Weight:
    """Closed form for type 1 input, brute force otherwise."""
    if theta == 1:
        return dual_data_type1(w).lambda_star
    return dual_weight_via_basis(w, theta, dim_cap)


def weight_multiset(basis) -> Counter:
    return Counter(weight_of(b) for b in basis)


def level_histogram(basis) -> dict:
    c = Counter(level_of_pattern(b) for b in basis)
    return dict(sorted(c.items()))
