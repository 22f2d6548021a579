from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import knot_fractions
from twobridge.arith import (
    Expansion,
    cf_value,
    default_max_len,
    enumerate_ht_expansions,
    even_expansion,
    format_fraction,
    knot_fraction,
    parse_fraction,
    positive_expansion,
    same_knot_class,
)
from twobridge.errors import DivisionByZero, DomainError


def convergent(terms):
    """Forward recurrence p_k = b_k p_{k-1} + p_{k-2}; independent of cf_value."""
    # [b1..bj] = 1/(b1 + ...) is the convergent of [0; b1, ..., bj]
    p_prev, p = 1, 0
    q_prev, q = 0, 1
    for b in terms:
        p_prev, p = p, b * p + p_prev
        q_prev, q = q, b * q + q_prev
    return Fraction(p, q)


def E(*terms, r0=0):
    return Expansion(terms, r0)


@pytest.mark.parametrize(
    "terms, value",
    [
        ((3,), Fraction(1, 3)),
        ((2, 2), Fraction(2, 5)),
        ((-2, 3), Fraction(-3, 5)),
        ((5, 4, 3, 6), Fraction(82, 429)),
    ],
)
def test_cf_value_examples(terms, value):
    assert cf_value(Expansion(terms)) == value
    assert convergent(terms) == value


def test_cf_value_integer_part_and_empty():
    assert cf_value(E(-2, 2, r0=1)) == Fraction(1, 3)
    assert cf_value(Expansion((), 4)) == 4


def test_cf_value_division_by_zero():
    # 1/(1 + 1/(-1)) divides by zero at the outer level
    with pytest.raises(DivisionByZero):
        cf_value(E(1, -1))


def test_zero_term_rejected():
    with pytest.raises(DomainError):
        E(2, 0, 3)


@pytest.mark.parametrize(
    "f, terms",
    [(Fraction(1, 3), (3,)), (Fraction(2, 5), (2, 2)), (Fraction(82, 429), (5, 4, 3, 6))],
)
def test_positive_expansion_examples(f, terms):
    assert positive_expansion(f).terms == terms


@pytest.mark.parametrize("f", [Fraction(0), Fraction(1), Fraction(-1, 3), Fraction(4, 3)])
def test_positive_expansion_domain(f):
    with pytest.raises(DomainError):
        positive_expansion(f)


def test_even_expansion_examples():
    assert even_expansion(Fraction(2, 5)).terms == (2, 2)
    assert even_expansion(Fraction(-2, 3)).terms == (-2, 2)
    e = even_expansion(Fraction(82, 429))
    assert all(t % 2 == 0 for t in e.terms)
    assert cf_value(e) == Fraction(82, 429)
    assert e.terms == (6, -2, 2, -2, 4, 6)


def test_even_expansion_no_solution():
    with pytest.raises(DomainError):
        even_expansion(Fraction(1, 3))
    with pytest.raises(DomainError):
        even_expansion(Fraction(0))


def test_same_knot_class():
    assert same_knot_class(Fraction(2, 5), Fraction(-3, 5))
    assert same_knot_class(Fraction(1, 3), Fraction(-2, 3))
    assert not same_knot_class(Fraction(2, 5), Fraction(1, 5))
    with pytest.raises(DomainError):
        same_knot_class(Fraction(1, 3), Fraction(1, 5))


def terms_of(expansions):
    return {e.terms for e in expansions}


def test_ht_expansions_trefoil():
    found = enumerate_ht_expansions(Fraction(1, 3), 4)
    assert terms_of(found) == {(3,), (-2, 2)}
    assert all(cf_value(e) == Fraction(1, 3) for e in found)


def test_ht_expansions_figure_eight():
    assert terms_of(enumerate_ht_expansions(Fraction(2, 5), 4)) == {(2, 2), (3, -2), (-2, 3)}


def test_ht_expansions_5436():
    f = Fraction(82, 429)
    assert default_max_len(f) == 22
    found = enumerate_ht_expansions(f, 14)
    assert len(found) == 8
    assert E(6, -2, 2, -2, 4, 6) in found


def test_ht_expansions_length_bound_prunes():
    assert terms_of(enumerate_ht_expansions(Fraction(1, 3), 1)) == {(3,)}


def test_parse_and_format():
    assert parse_fraction("82/429") == Fraction(82, 429)
    assert format_fraction(Fraction(82, 429)) == "82/429"
    for text in ["[5,4,3,6]", "1+[-2,2]", "[]"]:
        assert str(Expansion.parse(text)) == text
    with pytest.raises(DomainError):
        parse_fraction("eighty/two")
    with pytest.raises(DomainError):
        Expansion.parse("5,4")


def test_knot_fraction_normalises():
    assert knot_fraction(-3, 5) == Fraction(2, 5)
    assert knot_fraction(7, 5) == Fraction(2, 5)
    assert knot_fraction(Fraction(2, 5)) == Fraction(2, 5)
    with pytest.raises(DomainError):
        knot_fraction(1, 4)
    with pytest.raises(DomainError):
        knot_fraction(3, 9)


@given(knot_fractions())
def test_positive_round_trip(f):
    e = positive_expansion(f)
    assert cf_value(e) == f
    assert convergent(e.terms) == f
    assert all(t >= 1 for t in e.terms) and e.terms[-1] >= 2


@given(knot_fractions(), st.booleans())
def test_even_round_trip(f, negate):
    # even-numerator representative of f's class, optionally its negative
    g = f if f.numerator % 2 == 0 else f - 1
    g = -g if negate else g
    e = even_expansion(g)
    assert all(t % 2 == 0 for t in e.terms)
    assert cf_value(e) == g


@settings(max_examples=60)
@given(knot_fractions(max_alpha=99))
def test_oracle_soundness(f):
    for e in enumerate_ht_expansions(f):
        assert all(abs(t) >= 2 for t in e.terms)
        assert cf_value(e) == f
        assert same_knot_class(cf_value(Expansion(e.terms)), f)


@settings(max_examples=40, deadline=None)
@given(knot_fractions(max_alpha=61))
def test_oracle_plateau(f):
    bound = default_max_len(f)
    assert enumerate_ht_expansions(f, 2 * bound) == enumerate_ht_expansions(f, bound)
