from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import type2_decomposition_exists
from superbasis.weights import (
    ClassificationError,
    DecompositionError,
    UnitaryKind,
    Weight,
    bilinear_form,
    classify,
    decompose_type2,
    extended_simple_roots,
    graded_fundamental_weights,
    is_dominant,
    lemma_gamma_allowed,
    parse_signature,
    parse_weight,
    rho,
    shift_trivial,
    unit_even,
    unit_odd,
)

S11, S21, S12, S22 = (parse_signature(s) for s in ("1,1", "2,1", "1,2", "2,2"))


def W(sig, text):
    return parse_weight(text, sig)


def test_bilinear_form():
    assert bilinear_form(unit_even(S21, 1), unit_even(S21, 1)) == 1
    assert bilinear_form(unit_odd(S21, 1), unit_odd(S21, 1)) == -1
    assert bilinear_form(W(S21, "1,2|3"), W(S21, "4,5|6")) == -4


def test_rho():
    assert rho(S11) == W(S11, "-1/2|1/2")
    assert rho(S21) == W(S21, "0,-1|1")


def test_is_dominant():
    assert is_dominant(W(S21, "0,0|0"))
    assert not is_dominant(W(S21, "0,1|0"))
    assert not is_dominant(W(S21, "1,1/2|0"))


@pytest.mark.parametrize(
    "sig, text, kind, mu, k",
    [
        (S11, "0|0", UnitaryKind.BOTH, 1, 1),
        (S11, "-1|0", UnitaryKind.TYPE2_TYPICAL, None, None),
        (S11, "1|0", UnitaryKind.TYPE1_TYPICAL, None, None),
        (S21, "0,0|-3", UnitaryKind.TYPE2_TYPICAL, None, None),
        (S21, "0,0|-1", UnitaryKind.TYPE2_ATYPICAL, None, 1),
        (S21, "1,0|0", UnitaryKind.TYPE1_ATYPICAL, 1, None),
        (S12, "1|1,0", UnitaryKind.TYPE1_ATYPICAL, 2, None),
        (S22, "0,0|0,-1", UnitaryKind.TYPE2_ATYPICAL, None, 2),
    ],
)
def test_classify(sig, text, kind, mu, k):
    cls = classify(W(sig, text))
    assert (cls.kind, cls.mu, cls.k) == (kind, mu, k)


def test_trivial_weight_of_gl21_is_both_types():
    # The one-dimensional module is unitary of either type; its type 2
    # content is atypical at k=2.
    cls = classify(W(S21, "0,0|0"))
    assert cls.is_type2 and cls.k == 2
    assert cls.is_type1 and cls.mu == 1


def test_not_unitary():
    # every dominant gl(1|1) weight is unitary; gl(2|1) has a gap
    assert classify(W(S21, "1,0|-1/2")).kind is UnitaryKind.NOT_UNITARY
    with pytest.raises(ClassificationError):
        classify(W(S21, "0,1|0"))


def test_decompose_pure_delta():
    w = Weight(S21, [-Fraction(5, 2)] * 2, [Fraction(5, 2)])
    base, gamma, omega = decompose_type2(w)
    assert base == W(S21, "0,0|0") and gamma == 0 and omega == Fraction(5, 2)


def test_epsbar_and_pairings():
    even, odd = graded_fundamental_weights(S21)
    epsbar = odd[0]
    assert epsbar == W(S21, "0,0|-1")
    phi_even, phi_odd = extended_simple_roots(S21)
    fund, roots = even + odd, phi_even + phi_odd
    for i, w in enumerate(fund):
        for j, a in enumerate(roots):
            odd_pair = i >= S21.m and j >= S21.m
            assert bilinear_form(w, a) == ((-1 if odd_pair else 1) if i == j else 0)
    assert decompose_type2(epsbar) == (W(S21, "0,0|0"), 1, 0)
    # (0,-1|1) is type 1 only, so it has no type 2 decomposition.
    with pytest.raises(ClassificationError):
        decompose_type2(W(S21, "0,-1|1"))


@pytest.mark.parametrize("text", ["0,0|-3", "1/2,1/2|-5/2", "2,0|-7", "0,0|-1"])
def test_decompose_reassembles(text):
    w = W(S21, text)
    base, gamma, omega = decompose_type2(w)
    epsbar = graded_fundamental_weights(S21)[1][0]
    delta = graded_fundamental_weights(S21)[0][0]
    assert base + epsbar * gamma + delta * omega == w
    assert classify(base).is_type2
    assert lemma_gamma_allowed(gamma, 2)


def test_decompose_counterexample():
    # Type 2 unitary, yet no contravariant Lambda0 and admissible gamma exist.
    w = W(S21, "1,-2|-7/3")
    assert classify(w).kind is UnitaryKind.TYPE2_TYPICAL
    assert not type2_decomposition_exists(w)
    with pytest.raises(DecompositionError):
        decompose_type2(w)


type2_weights = st.builds(
    lambda m, n, ev, top, gaps: Weight(
        parse_signature(f"{m},{n}"),
        sorted(ev[:m], reverse=True),
        [top - g for g in sorted(gaps[:n])],
    ),
    st.integers(1, 3),
    st.integers(1, 3),
    st.lists(st.integers(-4, 4), min_size=3, max_size=3),
    st.fractions(min_value=-12, max_value=2, max_denominator=3),
    st.lists(st.integers(0, 3), min_size=3, max_size=3),
).filter(lambda w: classify(w).is_type2)


@given(type2_weights)
def test_decompose_matches_search(w):
    if not type2_decomposition_exists(w):
        with pytest.raises(DecompositionError):
            decompose_type2(w)
        return
    base, gamma, omega = decompose_type2(w)
    even, odd = graded_fundamental_weights(w.signature)
    assert base + odd[0] * gamma + even[0] * omega == w
    assert all(x.denominator == 1 for x in base.labels)
    assert classify(base).is_type2
    assert lemma_gamma_allowed(gamma, w.signature.m)


def test_shift_trivial():
    assert shift_trivial(W(S21, "1,0|0"), 1) == W(S21, "0,-1|1")
    assert shift_trivial(W(S11, "0|0"), 0) == W(S11, "0|0")


small = st.integers(min_value=-4, max_value=4)


@given(st.tuples(small, small, small, small), st.fractions(min_value=-5, max_value=5, max_denominator=4))
def test_shift_trivial_keeps_class(labels, omega):
    a, b, c, d = labels
    w = Weight(S22, sorted([a, b], reverse=True), sorted([c, d], reverse=True))
    assert classify(shift_trivial(w, omega)) == classify(w)


@given(st.tuples(small, small), st.tuples(small, small))
def test_decompose_is_additive_on_raw_expansion(x, y):
    from superbasis.weights import fundamental_expansion

    a = Weight(S21, sorted(x, reverse=True), [-5])
    b = Weight(S21, sorted(y, reverse=True), [-9])
    ea, eb, es = fundamental_expansion(a), fundamental_expansion(b), fundamental_expansion(a + b)
    assert ea[0] + eb[0] == es[0]
    assert ea[1] + eb[1] == es[1]
    assert ea[2] + eb[2] == es[2]


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_weight("1,2|3", S11)
    with pytest.raises(ValueError):
        parse_weight("1,a|3", S21)
    with pytest.raises(ValueError):
        parse_signature("3,0")
