"""Scalars, linear combinations, product, coproduct, pairing, antipode."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dposet.algebra import (
    GaussRat,
    LinComb,
    Tensor,
    antipode,
    apply_slot,
    as_lincomb,
    coproduct,
    format_lincomb,
    format_scalar,
    gram_matrix,
    lc_product,
    pairing,
    parse_lincomb,
    parse_scalar,
    reduced_coproduct,
    require_augmented,
    tensor_of,
)
from dposet.poset_core import SpecialPoset, empty_poset, enumerate_family, parse_poset


def sp(n, *pairs):
    return SpecialPoset(n, pairs)


def lc(text):
    return parse_lincomb(text)


# -- scalars ------------------------------------------------------------------------


def test_gaussian_rational_field_ops():
    a = GaussRat(1, 2)
    b = GaussRat(3, -1)
    assert a * b == GaussRat(5, 5)
    assert a + b == GaussRat(4, 1)
    assert a - b == GaussRat(-2, 3)
    assert (a / b) * b == a
    assert a.conjugate() == GaussRat(1, -2)
    assert GaussRat(Fraction(1, 2), Fraction(1, 3)) * 6 == GaussRat(3, 2)


def test_gaussian_rational_cross_type_equality():
    assert GaussRat(2, 0) == 2
    assert GaussRat(Fraction(1, 2), 0) == Fraction(1, 2)
    assert hash(GaussRat(2, 0)) == hash(2)
    assert GaussRat(2, 1) != 2


def test_scalar_literals_round_trip():
    for text in ("3", "-1/2", "1/2+3/4*I", "-2*I", "1-1*I", "0"):
        value = parse_scalar(text)
        assert parse_scalar(format_scalar(value)) == value


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        GaussRat(1, 1) / GaussRat(0, 0)


# -- combinations -------------------------------------------------------------------


def test_lincomb_arithmetic_and_zero_dropping():
    x = lc("SP(2;) - SP(2; 1<2)")
    y = lc("SP(2; 1<2)")
    assert x + y == lc("SP(2;)")
    assert x - x == LinComb.zero()
    assert 2 * y == lc("2*SP(2; 1<2)")
    assert y * Fraction(1, 2) == lc("1/2*SP(2; 1<2)")
    assert not (y - y)
    assert (x + y).coeff(sp(2)) == 1
    assert (x + y).coeff(sp(2, (2, 1))) == 0


def test_lincomb_grading_helpers():
    x = lc("SP(1;) + SP(2; 1<2) - SP(2;)")
    assert x.degrees() == [1, 2]
    assert x.homogeneous_part(2) == lc("SP(2; 1<2) - SP(2;)")
    assert not x.homogeneous_part(3)


def test_format_lincomb_round_trip_and_style():
    x = lc("SP(2;) - SP(2; 1<2)")
    assert format_lincomb(x) == "SP(2;) - SP(2; 1<2)"
    gauss = lc("(1/2+1/2*I)*SP(1;) - 1*I*SP(2;)")
    assert parse_lincomb(format_lincomb(gauss)) == gauss
    assert format_lincomb(LinComb.zero()) == "0"
    mixed = lc("21 + 2*12")
    assert parse_lincomb(format_lincomb(mixed)) == mixed


def test_tensor_of_flattens_nested_tensors():
    t = tensor_of(LinComb.basis(sp(1)), tensor_of(LinComb.basis(sp(1)), LinComb.basis(sp(2))))
    ((key, coeff),) = list(t.terms())
    assert isinstance(key, Tensor) and len(key.factors) == 3
    assert coeff == 1


def test_apply_slot_applies_in_place():
    t = tensor_of(LinComb.basis(sp(1)), LinComb.basis(sp(2, (1, 2))))
    doubled = apply_slot(t, 1, lambda k: 2 * LinComb.basis(k))
    ((key, coeff),) = list(doubled.terms())
    assert coeff == 2 and key.factors[1] == sp(2, (1, 2))


def test_require_augmented():
    with pytest.raises(ValueError):
        require_augmented(lc("SP(1;)") + LinComb.basis(empty_poset()))
    assert require_augmented(lc("SP(1;)")) == lc("SP(1;)")


# -- product and coproduct ------------------------------------------------------------


def test_product_is_composition_on_posets():
    assert lc_product(lc("SP(1;)"), lc("SP(2; 2<1)")) == lc("SP(3; 3<2)")
    assert lc_product(lc("SP(1;) - SP(1;)"), lc("SP(1;)")) == LinComb.zero()


def test_coproduct_of_the_two_chain():
    chain = lc("SP(2; 1<2)")
    full = coproduct(chain)
    assert full.coeff(Tensor(sp(1), sp(1))) == 1
    assert full.coeff(Tensor(sp(2, (1, 2)), empty_poset())) == 1
    assert full.coeff(Tensor(empty_poset(), sp(2, (1, 2)))) == 1
    assert len(list(full.terms())) == 3
    assert reduced_coproduct(chain) == tensor_of(lc("SP(1;)"), lc("SP(1;)"))


def _pp(text):
    return LinComb.basis(parse_poset(text))


def test_reduced_coproduct_of_the_diamond():
    # diamond: one minimum, two incomparable middles, one maximum
    diamond = _pp("PP(4; h: 1<2, 1<3, 2<4, 3<4; r: 2<3)")
    vee = _pp("PP(3; h: 1<2, 1<3; r: 2<3)")
    wedge = _pp("PP(3; h: 1<3, 2<3; r: 1<2)")
    point = _pp("SP(1;)")  # the plane point and the special point coincide
    chain2 = _pp("PP(2; h: 1<2; r:)")
    expected = (
        tensor_of(vee, point)
        + 2 * tensor_of(chain2, chain2)
        + tensor_of(point, wedge)
    )
    assert reduced_coproduct(diamond) == expected


def test_reduced_coproduct_of_a_four_vertex_tree():
    # root with a two-vertex chain on the left and a leaf on the right
    tree = _pp("PP(4; h: 1<2, 2<3, 1<4; r: 2<4, 3<4)")
    expected = (
        tensor_of(_pp("PP(3; h: 1<2, 2<3; r:)"), _pp("SP(1;)"))
        + tensor_of(_pp("PP(3; h: 1<2, 1<3; r: 2<3)"), _pp("SP(1;)"))
        + tensor_of(_pp("PP(2; h: 1<2; r:)"), _pp("PP(2; h: 1<2; r:)"))
        + tensor_of(_pp("PP(2; h: 1<2; r:)"), _pp("SP(2;)"))
        + tensor_of(_pp("SP(1;)"), _pp("PP(3; h: 1<2; r: 1<3, 2<3)"))
    )
    assert reduced_coproduct(tree) == expected


def _all_elements(max_degree):
    out = []
    for n in range(1, max_degree + 1):
        out.extend(enumerate_family("sp", n))
    return out


def test_coproduct_is_coassociative_through_degree_three():
    for P in _all_elements(3):
        x = LinComb.basis(P)
        left = apply_slot(coproduct(x), 0, lambda k: coproduct(LinComb.basis(k)))
        right = apply_slot(coproduct(x), 1, lambda k: coproduct(LinComb.basis(k)))
        assert left == right, P


def test_coproduct_is_an_algebra_morphism_in_low_degree():
    elems = _all_elements(2)
    for P in elems:
        for Q in elems:
            lhs = coproduct(lc_product(LinComb.basis(P), LinComb.basis(Q)))
            # slotwise product of the two coproducts
            rhs = LinComb.zero()
            for Ta, ca in coproduct(LinComb.basis(P)).terms():
                for Tb, cb in coproduct(LinComb.basis(Q)).terms():
                    rhs = rhs + ca * cb * tensor_of(
                        lc_product(LinComb.basis(Ta.factors[0]), LinComb.basis(Tb.factors[0])),
                        lc_product(LinComb.basis(Ta.factors[1]), LinComb.basis(Tb.factors[1])),
                    )
            assert lhs == rhs, (P, Q)


# -- pairing ---------------------------------------------------------------------------


def test_gram_matrix_of_degree_two_special_posets():
    assert gram_matrix("sp", 2) == [[2, 1, 1], [1, 1, 0], [1, 0, 1]]


def test_pairing_examples():
    assert pairing(lc("SP(1;)"), lc("SP(1;)")) == 1
    assert pairing(lc("SP(2; 1<2)"), lc("SP(2; 2<1)")) == 0
    assert pairing(lc("SP(2;)"), lc("SP(2;)")) == 2
    assert pairing(lc("SP(1;)"), lc("SP(2;)")) == 0


@given(
    st.sampled_from(enumerate_family("sp", 2)),
    st.sampled_from(enumerate_family("sp", 2)),
)
def test_pairing_is_symmetric(P, Q):
    assert pairing(LinComb.basis(P), LinComb.basis(Q)) == pairing(
        LinComb.basis(Q), LinComb.basis(P)
    )


@given(
    st.sampled_from(enumerate_family("sp", 1) + enumerate_family("sp", 2)),
    st.sampled_from(enumerate_family("sp", 1) + enumerate_family("sp", 2)),
    st.sampled_from(enumerate_family("sp", 3)),
)
def test_pairing_is_hopf(P, Q, R):
    if P.n + Q.n != R.n:
        return
    x, y, z = (LinComb.basis(k) for k in (P, Q, R))
    lhs = pairing(lc_product(x, y), z)
    rhs = Fraction(0)
    for T, c in coproduct(z).terms():
        rhs += c * pairing(x, LinComb.basis(T.factors[0])) * pairing(
            y, LinComb.basis(T.factors[1])
        )
    assert lhs == rhs


# -- antipode --------------------------------------------------------------------------


def test_antipode_defining_property_through_degree_three():
    for P in _all_elements(3):
        x = LinComb.basis(P)
        convolved = LinComb.zero()
        for T, c in coproduct(x).terms():
            convolved = convolved + c * lc_product(
                antipode(LinComb.basis(T.factors[0])), LinComb.basis(T.factors[1])
            )
        assert convolved == LinComb.zero(), P


def test_antipode_on_points_and_chains():
    assert antipode(lc("SP(1;)")) == lc("-SP(1;)")
    assert antipode(lc("SP(2;)")) == lc("SP(2;)")


# -- literals ---------------------------------------------------------------------------


def test_parse_lincomb_rejects_garbage():
    with pytest.raises(ValueError):
        parse_lincomb("XX(2;)")


@given(st.sampled_from(_all_elements(3)))
def test_lincomb_literal_round_trip(P):
    x = LinComb.basis(P) - 3 * LinComb.basis(sp(1))
    assert parse_lincomb(format_lincomb(x)) == x
    assert as_lincomb(P) == LinComb.basis(P)
