"""Generator matrices on the GT basis and the exact verification suites.

Operators are sparse maps ``(row, col) -> RadicalSum`` over the canonical
basis order.  Elementary lowering operators come from the closed-form
matrix elements; raising operators are their signed adjoints; all other
off-diagonal generators are graded brackets of elementary ones.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .characteristic import DegenerateConfigurationError
from .elements import (
    TransitionKey,
    adjoint_sign,
    elementary_lowering,
    nonelementary_element,
)
from .patterns import GTPattern, apply_delta, PatternDelta, enumerate_basis, grading_of, weight_of
from .radicals import ZERO, RadicalSum
from .weights import Weight, classify

__all__ = [
    "SparseOperator",
    "RepresentationModule",
    "VerificationReport",
    "build_module",
    "build_cartan",
    "build_elementary_lowering",
    "build_elementary_raising",
    "build_nonelementary",
    "graded_bracket",
    "generator_degree",
    "verify_algebra",
    "supertranspose",
    "dual_representation",
    "dual_module",
    "closed_form_report",
]


def generator_degree(m: int, p: int, q: int) -> int:
    return ((p > m) + (q > m)) % 2


class SparseOperator:
    """Square matrix with exact entries; zero entries are never stored."""

    __slots__ = ("dim", "degree", "entries")

    def __init__(self, dim: int, degree: int = 0, entries: Optional[Mapping] = None):
        self.dim = dim
        self.degree = degree % 2
        self.entries: dict = {}
        for key, v in (entries or {}).items():
            if v:
                self.entries[key] = v

    def get(self, i: int, j: int) -> RadicalSum:
        return self.entries.get((i, j), ZERO)

    def _combine(self, other: "SparseOperator", sign: int) -> "SparseOperator":
        out = dict(self.entries)
        for key, v in other.entries.items():
            out[key] = out.get(key, ZERO) + (v if sign > 0 else -v)
        return SparseOperator(self.dim, self.degree, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return SparseOperator(self.dim, self.degree, {k: -v for k, v in self.entries.items()})

    def scale(self, c) -> "SparseOperator":
        return SparseOperator(self.dim, self.degree, {k: v * c for k, v in self.entries.items()})

    def __matmul__(self, other: "SparseOperator") -> "SparseOperator":
        by_row: dict = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: dict = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                out[(i, j)] = out.get((i, j), ZERO) + a * b
        return SparseOperator(self.dim, self.degree + other.degree, out)

    def transpose(self) -> "SparseOperator":
        return SparseOperator(self.dim, self.degree, {(j, i): v for (i, j), v in self.entries.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseOperator):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def first_difference(self, other: "SparseOperator") -> Optional[tuple]:
        for key in sorted(set(self.entries) | set(other.entries)):
            if self.get(*key) != other.get(*key):
                return key, self.get(*key), other.get(*key)
        return None

    def to_dense_float(self) -> list:
        rows = [[0.0] * self.dim for _ in range(self.dim)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v.to_float()
        return rows

    def to_json(self) -> list:
        return [[i, j, v.to_json()] for (i, j), v in sorted(self.entries.items())]

    @classmethod
    def from_json(cls, dim: int, degree: int, data: Iterable) -> "SparseOperator":
        return cls(dim, degree, {(int(i), int(j)): RadicalSum.from_json(v) for i, j, v in data})

    def __repr__(self) -> str:
        return f"SparseOperator(dim={self.dim}, degree={self.degree}, nnz={len(self.entries)})"


def graded_bracket(a: SparseOperator, b: SparseOperator) -> SparseOperator:
    """``[A, B] = AB - (-1)^{deg A deg B} BA``."""
    ab, ba = a @ b, b @ a
    return ab + ba if a.degree and b.degree else ab - ba


def build_cartan(basis, p: int) -> SparseOperator:
    diag = {}
    for i, pat in enumerate(basis):
        diag[(i, i)] = RadicalSum.rational(weight_of(pat).labels[p - 1])
    return SparseOperator(len(basis), 0, diag)


def build_elementary_lowering(basis, p: int, theta: int, index: Optional[dict] = None) -> SparseOperator:
    """``pi(E_{p+1,p})``; the column is the source pattern."""
    index = index if index is not None else {b: i for i, b in enumerate(basis)}
    m = basis[0].signature.m
    out = {}
    for j, pat in enumerate(basis):
        for r in range(1, p + 1):
            target = apply_delta(pat, PatternDelta(r, p, -1), theta)
            if target is None or target not in index:
                continue
            v = elementary_lowering(pat, p, r, theta)
            if v:
                out[(index[target], j)] = v
    return SparseOperator(len(basis), generator_degree(m, p + 1, p), out)


def build_elementary_raising(lowering: SparseOperator, m: int, p: int, theta: int) -> SparseOperator:
    """``pi(E_{p,p+1}) = s * pi(E_{p+1,p})^T`` with the sign of the adjoint law."""
    s = adjoint_sign(m, p, p + 1, theta)
    t = lowering.transpose()
    return t if s > 0 else -t


def build_nonelementary(gens: Mapping, m: int, q: int, l: int) -> SparseOperator:
    """``E_{q,l}`` for ``|q - l| > 1`` from already built neighbours.

    Lowering: ``[E_{q,q-1}, E_{q-1,l}]``.  Raising: ``[E_{l,q-1}, E_{q-1,q}]``
    where ``q`` is the larger index.
    """
    if q > l:
        return graded_bracket(gens[(q, q - 1)], gens[(q - 1, l)])
    hi, lo = l, q
    return graded_bracket(gens[(lo, hi - 1)], gens[(hi - 1, hi)])


@dataclass
class RepresentationModule:
    highest_weight: Weight
    theta: int
    basis: list
    generators: dict
    parities: tuple
    weights: Optional[list] = None

    def __post_init__(self):
        if self.weights is None:
            self.weights = [weight_of(b) for b in self.basis]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def signature(self):
        return self.highest_weight.signature

    def E(self, p: int, q: int) -> SparseOperator:
        return self.generators[(p, q)]


def build_module(weight: Weight, theta: int, dim_cap: Optional[int] = None) -> RepresentationModule:
    basis = enumerate_basis(weight, theta, dim_cap)
    sig = weight.signature
    m, N = sig.m, sig.size
    index = {b: i for i, b in enumerate(basis)}
    gens: dict = {}
    for p in range(1, N + 1):
        gens[(p, p)] = build_cartan(basis, p)
    for p in range(1, N):
        low = build_elementary_lowering(basis, p, theta, index)
        gens[(p + 1, p)] = low
        gens[(p, p + 1)] = build_elementary_raising(low, m, p, theta)
    for d in range(2, N):
        for l in range(1, N - d + 1):
            q = l + d
            gens[(q, l)] = build_nonelementary(gens, m, q, l)
            gens[(l, q)] = build_nonelementary(gens, m, l, q)
    parities = tuple(grading_of(b) for b in basis)
    return RepresentationModule(weight, theta, basis, gens, parities)


@dataclass
class VerificationReport:
    checked: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)

    def record(self, family: str, ok: bool, detail=None):
        self.checked[family] = self.checked.get(family, 0) + 1
        if not ok:
            self.failures.setdefault(family, []).append(detail)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        fams = sorted(self.checked)
        return {
            "passed": self.passed,
            "families": {
                f: {
                    "checked": self.checked[f],
                    "failed": len(self.failures.get(f, [])),
                    "first_failure": (self.failures.get(f) or [None])[0],
                }
                for f in fams
            },
        }


def _relation_rhs(mod: RepresentationModule, p, q, r, s) -> SparseOperator:
    m = mod.signature.m
    out = SparseOperator(mod.dim, generator_degree(m, p, q) + generator_degree(m, r, s))
    if q == r:
        out = out + mod.E(p, s)
    if p == s:
        sign = -1 if generator_degree(m, p, q) * generator_degree(m, r, s) else 1
        out = out - mod.E(r, q).scale(sign)
    return out


def _describe(diff) -> Optional[list]:
    if diff is None:
        return None
    (i, j), a, b = diff
    return [i, j, a.to_json(), b.to_json()]


def _check_pair(mod: RepresentationModule, pq, rs):
    lhs = graded_bracket(mod.E(*pq), mod.E(*rs))
    rhs = _relation_rhs(mod, *pq, *rs)
    diff = lhs.first_difference(rhs)
    return pq, rs, diff


def verify_algebra(mod: RepresentationModule, threads: int = 1) -> VerificationReport:
    """Exact check of every graded commutation relation and of the adjoint law."""
    m, N = mod.signature.m, mod.signature.size
    rep = VerificationReport()
    keys = sorted(mod.generators)
    pairs = list(itertools.product(keys, keys))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(lambda pr: _check_pair(mod, *pr), pairs))
    else:
        results = [_check_pair(mod, *pr) for pr in pairs]
    for pq, rs, diff in results:
        rep.record("commutation", diff is None, {"pair": [list(pq), list(rs)], "entry": _describe(diff)})
    weights = mod.weights
    for (p, q) in keys:
        op = mod.E(p, q)
        adj = op.transpose()
        s = adjoint_sign(m, p, q, mod.theta)
        other = mod.E(q, p) if s > 0 else -mod.E(q, p)
        rep.record("adjoint", adj == other, {"generator": [p, q], "entry": _describe(adj.first_difference(other))})
        bad = None
        for (i, j) in op.entries:
            d = [a - b for a, b in zip(weights[i].labels, weights[j].labels)]
            expect = [Fraction(0)] * N
            expect[p - 1] += 1
            expect[q - 1] -= 1
            if d != expect:
                bad = [i, j]
                break
        rep.record("weight", bad is None, {"generator": [p, q], "entry": bad})
        grade_ok = all((mod.parities[i] + mod.parities[j]) % 2 == op.degree for (i, j) in op.entries)
        rep.record("grading", grade_ok, {"generator": [p, q]})
    return rep


def supertranspose(a: SparseOperator, parities: tuple) -> SparseOperator:
    """``(A^T)_{ij} = (-1)^{deg(A) * parity(j)} A_{ji}``."""
    out = {}
    for (i, j), v in a.entries.items():
        # entry (j, i) of the supertranspose; the sign reads the new column i
        out[(j, i)] = -v if a.degree * parities[i] % 2 else v
    return SparseOperator(a.dim, a.degree, out)


def dual_representation(mod: RepresentationModule) -> dict:
    """``pi*(E_pq) = -pi(E_pq)^{sT}`` on the same index set."""
    return {k: -supertranspose(op, mod.parities) for k, op in mod.generators.items()}


def dual_module(mod: RepresentationModule) -> RepresentationModule:
    """The dual module on the dual basis, as a module of the opposite unitary type.

    Weights are negated, so the highest weight is minus the lowest weight of
    ``mod``.  The signed transpose turns the type ``theta`` adjoint law into
    the type ``3 - theta`` law entrywise, with no change of basis.
    """
    from .duality import lowest_weight

    weights = [-w for w in mod.weights]
    hw = -lowest_weight(mod.weights)
    return RepresentationModule(hw, 3 - mod.theta, mod.basis, dual_representation(mod), mod.parities, weights)


def closed_form_report(mod: RepresentationModule) -> dict:
    """Compare the closed-form composite elements with the bracket operators.

    Returns counts of agreeing, disagreeing and degenerate entries plus the
    first disagreement, for lowering and raising composites alike.
    """
    m, N = mod.signature.m, mod.signature.size
    index = {b: i for i, b in enumerate(mod.basis)}
    agree = disagree = degenerate = 0
    first = None
    for d in range(2, N):
        for l in range(1, N - d + 1):
            q = l + d
            for direction in (-1, 1):
                op = mod.E(q, l) if direction < 0 else mod.E(l, q)
                levels = list(range(q - 1, l - 1, -1))
                for j, pat in enumerate(mod.basis):
                    for slots in itertools.product(*[range(1, s + 1) for s in levels]):
                        key = TransitionKey(pat, tuple(zip(levels, slots)), direction)
                        target = pat
                        for s, u in key.shifts:
                            target = apply_delta(target, PatternDelta(u, s, direction), mod.theta) if target else None
                        if target is None or target not in index:
                            continue
                        want = op.get(index[target], j)
                        try:
                            got = nonelementary_element(key, mod.theta)
                        except DegenerateConfigurationError:
                            degenerate += 1
                            continue
                        if got == want:
                            agree += 1
                        else:
                            disagree += 1
                            if first is None:
                                first = {
                                    "generator": [q, l] if direction < 0 else [l, q],
                                    "column": j,
                                    "shifts": [list(x) for x in key.shifts],
                                    "closed_form": got.to_json(),
                                    "bracket": want.to_json(),
                                }
    return {"agree": agree, "disagree": disagree, "degenerate": degenerate, "first": first}
