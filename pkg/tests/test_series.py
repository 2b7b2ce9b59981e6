"""Series log/exp, layer extraction, and invariant normalization tests."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import h2_g3_poly
from charvar.errors import ConstantTermNotOne, NonIntegerCoefficient, NotPolynomial
from charvar.partitions import Partition, hook_term
from charvar.polynomials import (
    FLAVOR_E,
    FLAVOR_PURE,
    FLAVOR_QT,
    FLAVOR_XY,
    FactoredFraction,
    SparsePoly,
)
from charvar.series import (
    TruncatedSeries,
    extract_layers,
    hook_sum_series,
    invariant_from_layer,
    plethystic_exp_of_layers,
    series_exp,
    series_log,
)

Q = ("q",)
QT = ("q", "t")


def const_series(flavor, values):
    coeffs = tuple(
        FactoredFraction.from_poly(SparsePoly.constant(flavor.variables, v))
        for v in values
    )
    return TruncatedSeries(flavor, coeffs)


class TestHookSumSeries:
    def test_order_zero_is_one(self):
        s = hook_sum_series(FLAVOR_QT, 3, 0)
        assert s.coeffs[0] == 1 and s.order == 0

    def test_weight_one_coefficient(self):
        s = hook_sum_series(FLAVOR_E, 2, 1)
        assert s.coeffs[0] == 1
        assert s.coeffs[1] == SparsePoly(Q, {(0,): 1, (1,): -2, (2,): 1})

    def test_weight_two_coefficient_matches_direct_sum(self):
        s = hook_sum_series(FLAVOR_E, 2, 2)
        # hooks of (2): {2,1} with legs 0; hooks of (1,1): {2,1} with legs 1,0
        h2 = SparsePoly(Q, {(0,): 1, (2,): -1}) * SparsePoly(Q, {(0,): 1, (1,): -1})
        h11 = h2.shift((-1,))
        assert s.coeffs[2] == FactoredFraction.from_poly(h2 * h2 + h11 * h11)


class TestSeriesLog:
    def test_log_of_one(self):
        s = const_series(FLAVOR_E, [1, 0, 0])
        assert all(c.is_zero() for c in series_log(s).coeffs)

    def test_log_of_one_plus_at(self):
        a = FactoredFraction.from_poly(SparsePoly(Q, {(0,): 1, (1,): 1}))
        s = TruncatedSeries(FLAVOR_E, (FactoredFraction.one(Q), a, FactoredFraction.zero(Q)))
        log = series_log(s)
        assert log.coeffs[1] == a
        assert log.coeffs[2] == (a * a).scale(Fraction(-1, 2))

    def test_log_of_exp_prefix(self):
        s = const_series(FLAVOR_E, [1, 1, Fraction(1, 2), Fraction(1, 6)])
        log = series_log(s)
        assert log.coeffs[1] == 1
        assert log.coeffs[2].is_zero() and log.coeffs[3].is_zero()

    def test_constant_term_must_be_one(self):
        with pytest.raises(ConstantTermNotOne):
            series_log(const_series(FLAVOR_E, [2, 0]))

    def test_exp_inverts_log_on_hook_series(self):
        s = hook_sum_series(FLAVOR_QT, 2, 3)
        assert series_exp(series_log(s)) == s


@given(
    st.lists(
        st.fractions(min_value=-3, max_value=3, max_denominator=4),
        min_size=1,
        max_size=5,
    )
)
@settings(max_examples=40, deadline=None)
def test_exp_log_round_trip_on_random_series(tail):
    s = const_series(FLAVOR_E, [1] + tail)
    assert series_exp(series_log(s)) == s


class TestExtractLayers:
    @pytest.mark.parametrize("g", [0, 1, 2, 3])
    def test_first_layer_is_the_single_cell_term(self, g):
        (v1,) = extract_layers(FLAVOR_E, g, 1)
        assert v1 == hook_term(FLAVOR_E, Partition((1,)), g)

    def test_qt_genus_one_first_layer(self):
        (v1,) = extract_layers(FLAVOR_QT, 1, 1)
        expected = FactoredFraction.from_poly(
            SparsePoly(QT, {(0, 0): 1, (1, 1): 2, (2, 2): 1})
        )
        expected = expected.divided_by_poly(SparsePoly(QT, {(0, 0): 1, (1, 2): -1}))
        expected = expected.divided_by_poly(SparsePoly(QT, {(0, 0): 1, (1, 0): -1}))
        assert v1 == expected

    @pytest.mark.parametrize(
        "flavor,g,nmax",
        [
            (FLAVOR_E, 2, 4),
            (FLAVOR_E, 0, 3),
            (FLAVOR_QT, 2, 3),
            (FLAVOR_QT, 1, 3),
            (FLAVOR_PURE, 3, 3),
            (FLAVOR_XY, 2, 2),
        ],
    )
    def test_reassembly_round_trip(self, flavor, g, nmax):
        layers = extract_layers(flavor, g, nmax)
        assert plethystic_exp_of_layers(flavor, layers, nmax) == hook_sum_series(
            flavor, g, nmax
        )

    @pytest.mark.parametrize("flavor", [FLAVOR_E, FLAVOR_QT])
    @pytest.mark.parametrize("g", [2, 3])
    def test_extraction_stable_under_higher_truncation(self, flavor, g):
        small = extract_layers(flavor, g, 3)
        large = extract_layers(flavor, g, 4)
        for a, b in zip(small, large):
            assert a == b


class TestInvariantFromLayer:
    @pytest.mark.parametrize("g", [0, 1, 2, 3])
    def test_rank_one_e_invariant_is_one(self, g):
        (v1,) = extract_layers(FLAVOR_E, g, 1)
        assert invariant_from_layer(FLAVOR_E, 1, g, v1) == SparsePoly.one(Q)

    @pytest.mark.parametrize("g", [1, 2, 3, 5])
    def test_rank_one_qt_invariant_is_one(self, g):
        (v1,) = extract_layers(FLAVOR_QT, g, 1)
        assert invariant_from_layer(FLAVOR_QT, 1, g, v1) == SparsePoly.one(QT)

    def test_rank_two_genus_three_matches_printed_polynomial(self):
        layers = extract_layers(FLAVOR_QT, 3, 2)
        assert invariant_from_layer(FLAVOR_QT, 2, 3, layers[1]) == h2_g3_poly()

    def test_non_integer_coefficient_is_detected(self):
        layer = FactoredFraction.from_poly(
            SparsePoly.constant(("t",), Fraction(1, 2))
        )
        with pytest.raises(NonIntegerCoefficient):
            invariant_from_layer(FLAVOR_PURE, 1, 1, layer)

    def test_not_polynomial_is_detected(self):
        layer = FactoredFraction.one(("t",)).divided_by_poly(
            SparsePoly(("t",), {(0,): 1, (4,): -1})
        )
        with pytest.raises(NotPolynomial):
            invariant_from_layer(FLAVOR_PURE, 1, 1, layer)
