from fractions import Fraction

import pytest

from conftest import CORPUS, module, weight
from oracles import lattice_scan, typical_dimension
from superbasis.patterns import (
    DimensionCapExceeded,
    GTPattern,
    MalformedPatternError,
    PatternDelta,
    apply_delta,
    enumerate_basis,
    grading_of,
    highest_pattern,
    level_of_pattern,
    validate,
    weight_of,
)
from superbasis.weights import UnitaryKind, classify, parse_signature
from superbasis.young import Partition, count_supertableaux, is_hook_bipartition, row_bipartition

S11, S21 = parse_signature("1,1"), parse_signature("2,1")


def pat(sig, *rows):
    return GTPattern(sig, rows)


def test_validate_examples():
    assert validate(pat(S21, (0, 0, -3), (0, -1), (0,)), 2)
    assert not validate(pat(S21, (0, 0, 0), (0, -1), (-1,)), 2)
    # row 2 not dominant
    assert not validate(pat(S21, (0, 0, -3), (-1, 0), (0,)), 2)


def test_malformed_pattern():
    with pytest.raises(MalformedPatternError):
        pat(S21, (0, 0, 0), (0,), (0,))


@pytest.mark.parametrize(
    "alg, w, theta, dim",
    [("2,1", "0,0|-3", 2, 4), ("2,1", "0,0|0", 2, 1), ("1,1", "0|-1", 2, 2), ("2,2", "2,1|0,0", 1, 20)],
)
def test_enumerate_examples(alg, w, theta, dim):
    assert len(enumerate_basis(weight(alg, w), theta)) == dim


def test_gl11_basis_labels():
    basis = enumerate_basis(weight("1,1", "0|-1"), 2)
    assert [b.label(1, 1) for b in basis] == [0, -1]


def test_enumeration_rejects_wrong_type():
    with pytest.raises(ValueError):
        enumerate_basis(weight("2,1", "0,0|-3"), 1)


def test_dimension_cap(monkeypatch):
    with pytest.raises(DimensionCapExceeded):
        enumerate_basis(weight("2,2", "1,0|-4,-5"), 2, dim_cap=10)
    monkeypatch.setenv("SUPERBASIS_DIM_CAP", "8")
    with pytest.raises(DimensionCapExceeded):
        enumerate_basis(weight("2,1", "3,0|1"), 1)


@pytest.mark.parametrize("case", CORPUS, ids=str)
def test_dimension_oracles(case):
    alg, w, theta = case
    mod = module(*case)
    hw = mod.highest_weight
    cls = classify(hw)
    if cls.kind in (UnitaryKind.TYPE1_TYPICAL, UnitaryKind.TYPE2_TYPICAL):
        assert mod.dim == typical_dimension(hw)
    labels = hw.labels
    m = hw.signature.m
    if theta == 1 and all(x.denominator == 1 and x >= 0 for x in labels) and is_hook_bipartition(
        row_bipartition(m, labels), m
    ):
        # covariant: rebuild the hook shape and count supertableaux
        rows = [int(x) for x in hw.even]
        cols = [int(x) for x in hw.odd]
        shape = rows + [sum(1 for c in cols if c > j) for j in range(max(cols, default=0))]
        assert mod.dim == count_supertableaux(m, hw.signature.n, Partition(shape))


@pytest.mark.parametrize("case", CORPUS, ids=str)
def test_lattice_scan_matches_enumeration(case):
    mod = module(*case)
    assert lattice_scan(mod.highest_weight, case[2]) == set(mod.basis)


@pytest.mark.parametrize("case", CORPUS, ids=str)
def test_basis_is_cyclic_on_highest_pattern(case):
    # every basis vector is reached from the top by nonzero lowering entries
    mod = module(*case)
    N = mod.signature.size
    assert mod.basis[0] == highest_pattern(mod.highest_weight)
    seen, stack = {0}, [0]
    while stack:
        j = stack.pop()
        for p in range(1, N):
            for (i, jj) in mod.E(p + 1, p).entries:
                if jj == j and i not in seen:
                    seen.add(i)
                    stack.append(i)
    assert seen == set(range(mod.dim))


def test_basis_order_is_descending():
    basis = enumerate_basis(weight("2,2", "2,1|0,0"), 1)
    keys = [b.sort_key() for b in basis]
    assert keys == sorted(keys, reverse=True)


def test_weight_of_and_levels():
    w = weight("1,1", "0|-1")
    top, low = enumerate_basis(w, 2)
    assert weight_of(top) == w
    assert weight_of(low) == weight("1,1", "-1|0")
    assert (level_of_pattern(top), grading_of(top)) == (0, 0)
    assert (level_of_pattern(low), grading_of(low)) == (1, 1)
    assert weight_of(highest_pattern(weight("2,1", "0,0|-3"))) == weight("2,1", "0,0|-3")


def test_max_level_gl11():
    basis = enumerate_basis(weight("1,1", "1|0"), 1)
    assert max(level_of_pattern(b) for b in basis) == 1


def test_apply_delta_examples():
    top, low = enumerate_basis(weight("1,1", "0|-1"), 2)
    assert apply_delta(top, PatternDelta(1, 1, -1), 2) == low
    assert apply_delta(low, PatternDelta(1, 1, -1), 2) is None
    assert apply_delta(top, PatternDelta(1, 2, 1), 2) is None


@pytest.mark.parametrize("case", CORPUS, ids=str)
def test_apply_delta_inverse(case):
    mod = module(*case)
    theta, N = case[2], mod.signature.size
    members = set(mod.basis)
    for b in mod.basis:
        for p in range(1, N):
            for r in range(1, p + 1):
                for d in (-1, 1):
                    delta = PatternDelta(r, p, d)
                    out = apply_delta(b, delta, theta)
                    if out is None:
                        continue
                    assert out in members
                    assert apply_delta(out, delta.inverse(), theta) == b
                    assert weight_of(out) != weight_of(b)


def test_gl21_typical_weight_is_fractional_friendly():
    basis = enumerate_basis(weight("2,1", "1/2,1/2|-5/2"), 2)
    assert len(basis) == 4
    assert all(x.denominator == 2 for b in basis for row in b.rows for x in row)
    assert Fraction(-1, 2) in {b.label(2, 2) for b in basis}
