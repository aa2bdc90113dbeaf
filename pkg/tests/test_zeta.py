"""Zeta classification, closed forms, and exact series expansion routes."""

from fractions import Fraction

import pytest

from conftest import tmat, tpoly, xpoly
from ffzeta import errors, make_field
from ffzeta.dynamics import NkValue, nk_direct, nk_table, system_data
from ffzeta.spectral import SpectralData
from ffzeta.zeta import (
    SUBSET_CAP,
    SeriesTrunc,
    ZetaClosedForm,
    classify,
    closed_form,
    nk_from_series,
    series_from_closed_form,
    series_from_nk,
)

F2 = make_field(2)
F7 = make_field(7)

DIAG62 = tmat(F7, [[(6,), (0,)], [(0,), (2,)]])
CUBIC_COMP = tmat(
    F2,
    [
        [(0,), (0,), (0, 1)],
        [(1,), (0,), (0, 0, 1)],
        [(0,), (1,), (0, 0, 1)],
    ],
)


def fake_sd(field, E, rou, unit, weights=()):
    """SpectralData shell for order-set logic; polynomial slots are dummies."""
    one = tpoly(field, 1)
    return SpectralData(
        field=field,
        E=E,
        rou_orders=rou,
        unit_orders=unit,
        weights=weights,
        G=one,
        Pprime=xpoly(field, (1,)),
        residual=one,
    )


class TestClassify:
    def test_all_rou_is_algebraic(self):
        res = classify(system_data(F7, DIAG62))
        assert res.algebraic and res.certificate is None
        assert res.radius_exponent == 0

    def test_bare_unit_is_transcendental(self):
        res = classify(system_data(F2, CUBIC_COMP))
        assert not res.algebraic and res.closed_form is None
        assert res.certificate.bad_unit_order == 1
        assert res.certificate.rou_orders == ()
        assert res.radius_exponent == -2

    def test_divisibility_rescues(self):
        sd = fake_sd(F7, 0, rou=((2, 1),), unit=((4, 1),), weights=((4, -1),))
        assert classify(sd).algebraic

    def test_least_offender_reported(self):
        sd = fake_sd(F7, 1, rou=((3, 1),), unit=((2, 1), (6, 1), (4, 1)))
        res = classify(sd)
        assert not res.algebraic
        assert res.certificate.bad_unit_order == 2
        assert res.certificate.rou_orders == (3,)


class TestClosedForm:
    def test_two_coprime_orders(self):
        cf = closed_form(system_data(F7, DIAG62))
        assert cf.q == 7 and cf.E == 0
        assert cf.factors == (
            (1, Fraction(-1)),
            (2, Fraction(1, 2)),
            (3, Fraction(1, 3)),
            (6, Fraction(-1, 6)),
        )
        assert cf.display() == "(1-z^2)^{1/2}(1-z^3)^{1/3}/((1-z)(1-z^6)^{1/6})"

    def test_no_unit_circle_at_all(self):
        cf = closed_form(system_data(F2, tmat(F2, [[(0, 1)]])))
        assert cf.factors == ((1, Fraction(-1)),)
        assert cf.display() == "1/(1-2z)"

    def test_order_one_cancels_everything(self):
        cf = closed_form(fake_sd(F2, 0, rou=((1, 1),), unit=()))
        assert cf.factors == ()
        assert cf.display() == "1"

    def test_repeated_order_merges(self):
        cf = closed_form(fake_sd(F7, 0, rou=((2, 2),), unit=()))
        # subsets of {2, 2}: two singletons +1/2 each, one pair -1/2
        assert cf.factors == ((1, Fraction(-1)), (2, Fraction(1, 2)))

    def test_transcendental_rejected(self):
        with pytest.raises(errors.NotAlgebraicError):
            closed_form(system_data(F2, CUBIC_COMP))

    def test_subset_cap(self):
        sd = fake_sd(F2, 0, rou=((1, SUBSET_CAP + 1),), unit=())
        with pytest.raises(errors.CapExceededError):
            closed_form(sd)


class TestSeriesFromNk:
    def test_zero_counts(self):
        s = series_from_nk(2, [NkValue.zero()] * 6, 6)
        assert s.coeffs == (Fraction(1),) + (Fraction(0),) * 6

    def test_geometric(self):
        s = series_from_nk(2, [NkValue.of(k) for k in range(1, 11)], 10)
        assert s.coeffs == tuple(Fraction(2**n) for n in range(11))

    def test_callable_source(self):
        s = series_from_nk(7, lambda k: nk_direct(F7, DIAG62, k), 8)
        assert s.coeffs[:2] == (Fraction(1), Fraction(1))
        assert s == series_from_nk(7, nk_table(F7, DIAG62, 8), 8)

    def test_short_input_rejected(self):
        with pytest.raises(errors.MalformedInputError):
            series_from_nk(2, [NkValue.of(1)], 5)


class TestSeriesFromClosedForm:
    def test_geometric(self):
        cf = ZetaClosedForm(q=2, E=1, factors=((1, Fraction(-1)),))
        s = series_from_closed_form(cf, 6)
        assert s.coeffs == tuple(Fraction(2**n) for n in range(7))

    def test_square_root_factor(self):
        cf = ZetaClosedForm(q=5, E=0, factors=((2, Fraction(1, 2)),))
        s = series_from_closed_form(cf, 4)
        assert s.coeffs == (
            Fraction(1),
            Fraction(0),
            Fraction(-1, 2),
            Fraction(0),
            Fraction(-1, 8),
        )

    def test_matches_exponential_route(self):
        cf = closed_form(system_data(F7, DIAG62))
        lhs = series_from_closed_form(cf, 50)
        rhs = series_from_nk(7, nk_table(F7, DIAG62, 50), 50)
        assert lhs == rhs


class TestInverseRecurrence:
    def test_recovers_counts(self):
        tab = nk_table(F7, DIAG62, 20)
        s = series_from_nk(7, tab, 20)
        got = nk_from_series(s)
        assert got == [v.as_int(7) for v in tab]

    def test_non_integral_rejected(self):
        s = SeriesTrunc(order=1, coeffs=(Fraction(1), Fraction(1, 3)))
        with pytest.raises(errors.NonIntegralError):
            nk_from_series(s)


def test_permuting_diagonal_leaves_closed_form():
    swapped = tmat(F7, [[(2,), (0,)], [(0,), (6,)]])
    assert closed_form(system_data(F7, DIAG62)) == closed_form(
        system_data(F7, swapped)
    )


def test_series_trunc_length_guard():
    with pytest.raises(errors.InternalInvariantError):
        SeriesTrunc(order=2, coeffs=(Fraction(1),))
