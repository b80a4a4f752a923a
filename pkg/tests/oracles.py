"""Independent reference values used by the tests.

Nothing here touches GT patterns or matrix elements: dimensions come from
the Weyl product formula and from counting supertableaux, and the lattice
scan only calls the validator on every candidate array.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import prod

from superbasis.patterns import GTPattern, validate
from superbasis.weights import Weight


def weyl_dimension(labels) -> int:
    """Dimension of the gl(k) irreducible with dominant highest weight ``labels``."""
    k = len(labels)
    num = prod(Fraction(labels[i] - labels[j] + j - i) for i in range(k) for j in range(i + 1, k))
    den = prod(Fraction(j - i) for i in range(k) for j in range(i + 1, k))
    d = Fraction(num) / Fraction(den)
    assert d.denominator == 1
    return int(d)


def typical_dimension(w: Weight) -> int:
    m, n = w.signature.m, w.signature.n
    return 2 ** (m * n) * weyl_dimension(w.even) * weyl_dimension(w.odd)


def lattice_scan(w: Weight, theta: int) -> set:
    """Every array with the right top row that the validator accepts.

    Even slots range over ``[min even - n, max even]`` and odd slots over the
    span of the odd top labels, each in the residue class of its top label.
    """
    sig = w.signature
    m, n, N = sig.m, sig.n, sig.size
    ev_lo, ev_hi = min(w.even) - n, max(w.even)
    od_lo, od_hi = min(w.odd), max(w.odd)
    ev_vals = [ev_lo + i for i in range(int(ev_hi - ev_lo) + 1)]
    od_vals = [od_lo + i for i in range(int(od_hi - od_lo) + 1)]
    slots = []
    for p in range(N - 1, 0, -1):
        for r in range(1, p + 1):
            slots.append(ev_vals if r <= m else od_vals)
    found = set()
    for choice in itertools.product(*slots):
        rows = [w.labels]
        it = iter(choice)
        for p in range(N - 1, 0, -1):
            rows.append(tuple(next(it) for _ in range(p)))
        pat = GTPattern(sig, rows)
        if validate(pat, theta):
            found.add(pat)
    return found


def type2_decomposition_exists(w: Weight) -> bool:
    """Search ``gamma`` over its residue class for an integral type 2 ``Lambda0``."""
    from superbasis.weights import (
        bilinear_form,
        classify,
        extended_simple_roots,
        graded_fundamental_weights,
        is_dominant,
        lemma_gamma_allowed,
    )

    sig = w.signature
    even, odd = graded_fundamental_weights(sig)
    epsbar, delta = odd[0], even[0]
    rest = w - delta * bilinear_form(w, extended_simple_roots(sig)[0][0])
    for k in range(-60, 60):
        gamma = -rest.odd[0] + k
        if not lemma_gamma_allowed(gamma, sig.m):
            continue
        base = rest - epsbar * gamma
        if all(x.denominator == 1 for x in base.labels) and is_dominant(base) and classify(base).is_type2:
            return True
    return False
