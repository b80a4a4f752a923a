import pytest
from hypothesis import given, strategies as st

from conftest import CORPUS, module
from superbasis.patterns import pair_ok, row_admits
from superbasis.young import (
    Bipartition,
    Partition,
    conjugate,
    count_supertableaux,
    hook_weight,
    is_hook_bipartition,
    is_horizontal_strip,
    is_vertical_strip,
    row_bipartition,
    strip_branching_check,
)

P = Partition


def B(even, odd):
    return Bipartition(P(even), P(odd))


def test_conjugate():
    assert conjugate(P((3, 1))) == P((2, 1, 1))
    assert conjugate(P((0,))) == P(())


def test_strips():
    assert is_horizontal_strip(P((3, 1)), P((2, 1)))
    # (3,3)/(3,1) puts its two boxes in columns 2 and 3, so it is a strip
    assert is_horizontal_strip(P((3, 3)), P((3, 1)))
    assert not is_horizontal_strip(P((3, 3)), P((2, 1)))
    assert is_horizontal_strip(P((2, 1)), P((2, 1)))
    assert is_vertical_strip(P((2, 2, 1)), P((2, 1)))
    assert not is_vertical_strip(P((3, 1)), P((1, 1)))
    assert is_vertical_strip(P((2, 1)), P((2, 1)))


def test_strip_branching_examples():
    assert strip_branching_check(B((3, 1), (2,)), B((2, 1), (1,)))
    assert strip_branching_check(B((3, 1), (2,)), B((3, 1), (2,)))
    # the odd halves (1) / (1) are fine; (3,3) -> (3,1) drops a row by two
    assert not strip_branching_check(B((3, 3), (1,)), B((3, 1), (1,)))


def test_partition_validation():
    with pytest.raises(ValueError):
        P((1, 2))
    with pytest.raises(ValueError):
        P((-1,))
    assert P((2, 0, 0)) == P((2,))


partitions = st.lists(st.integers(0, 6), max_size=6).map(lambda xs: P(sorted(xs, reverse=True)))


@given(partitions)
def test_conjugate_is_involution(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).size == p.size


@given(partitions, partitions)
def test_conjugation_swaps_strips(a, b):
    assert is_horizontal_strip(a, b) == is_vertical_strip(conjugate(a), conjugate(b))
    assert is_vertical_strip(a, b) == is_horizontal_strip(conjugate(a), conjugate(b))


def _covariant_corpus():
    for alg, w, theta in CORPUS:
        mod = module(alg, w, theta)
        hw = mod.highest_weight
        if theta == 1 and all(x.denominator == 1 and x >= 0 for x in hw.labels):
            if is_hook_bipartition(row_bipartition(hw.signature.m, hw.labels), hw.signature.m):
                yield mod


def test_strip_check_matches_branching_on_covariant_corpus():
    checked = 0
    for mod in _covariant_corpus():
        m, N = mod.signature.m, mod.signature.size
        for pat in mod.basis:
            for p in range(m + 1, N):
                up = row_bipartition(m, pat.row(p + 1))
                lo = row_bipartition(m, pat.row(p))
                assert strip_branching_check(up, lo)
                checked += 1
    assert checked > 0


def _candidate_rows(m, upper):
    # everything one step of even drop and odd interlacing could reach, and more
    import itertools

    ev = [range(int(x) - 2, int(x) + 1) for x in upper[:m]]
    od = [range(0, int(upper[m]) + 1)] * (len(upper) - m - 1)
    for row in itertools.product(*ev, *od):
        yield tuple(row)


def test_strip_check_equivalent_to_pair_ok():
    agree = 0
    for mod in _covariant_corpus():
        m, N = mod.signature.m, mod.signature.size
        uppers = {pat.row(p + 1) for pat in mod.basis for p in range(m + 1, N)}
        for up in uppers:
            p = len(up) - 1
            for lo in _candidate_rows(m, up):
                if any(x < 0 for x in lo) or not row_admits(m, lo, p, 1):
                    continue
                b_lo = row_bipartition(m, lo)
                if not is_hook_bipartition(b_lo, m):
                    continue
                assert strip_branching_check(row_bipartition(m, up), b_lo) == pair_ok(m, up, lo, p, 1)
                agree += 1
    assert agree > 0


@pytest.mark.parametrize(
    "m, n, shape, count",
    [(1, 1, (1,), 2), (2, 1, (1,), 3), (2, 1, (2,), 5), (1, 1, (2, 1), 2), (2, 2, (1, 1), 8)],
)
def test_supertableaux_small(m, n, shape, count):
    # vector: m+n; Sym^2 of (2|1): 3 + 2; Lambda^2 of (2|2): 1 + 4 + 3
    assert count_supertableaux(m, n, P(shape)) == count


def test_hook_weight():
    assert hook_weight(2, 1, P((3, 1, 1))) == ([3, 1], [1])
    assert hook_weight(2, 1, P((1, 1, 1, 1))) == ([1, 1], [2])
    assert hook_weight(1, 1, P((2, 2))) is None
