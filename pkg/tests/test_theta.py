"""Closed theta-style sums and the classical identity checks."""

import pytest

from crankq.etaq import eta_series, named_series, rr_stretch
from crankq.series import Series
from crankq.theta import (ThetaKind, five_dissection_sides, theta_sum,
                          verify_5dissections, verify_K_identities,
                          verify_theta_identity)


def test_triangular_sum_small():
    t = theta_sum(ThetaKind.TRIANGULAR, 11)
    assert [t.coeff(n) for n in range(11)] == [1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1]


def test_squares_sum_small():
    s = theta_sum(ThetaKind.SQUARES, 10)
    assert [s.coeff(n) for n in range(10)] == [1, -2, 0, 0, 2, 0, 0, 0, 0, -2]


def test_pent_sum_small():
    s = theta_sum(ThetaKind.PENT_6K1, 8)
    assert [s.coeff(n) for n in range(8)] == [1, -5, 7, 0, 0, -11, 0, 13]


def test_cubic_sum_small():
    s = theta_sum(ThetaKind.CUBIC_3K1, 17)
    assert s.coeff(0) == 1 and s.coeff(1) == 2
    assert s.coeff(5) == -4 and s.coeff(8) == -5 and s.coeff(16) == 7


def test_triangular_coeffs_are_zero_or_one():
    t = theta_sum(ThetaKind.TRIANGULAR, 300)
    assert set(t.coeffs) <= {0, 1}


def test_squares_coeff_range():
    s = theta_sum(ThetaKind.SQUARES, 300)
    assert set(s.coeffs) <= {-2, 0, 1, 2}
    assert [n for n, c in s.terms() if c == 1] == [0]


@pytest.mark.parametrize("kind", list(ThetaKind))
def test_theta_identities_at_300(kind):
    assert verify_theta_identity(kind, 300).passed


def test_theta_identity_minimal_window():
    assert verify_theta_identity(ThetaKind.SQUARES, 1).passed


# ----------------------------------------------------------------------
# quintic dissections

def test_5dissections_pass():
    assert verify_5dissections(150).passed
    assert verify_5dissections(26).passed
    assert verify_5dissections(150, which="31").passed
    assert verify_5dissections(150, which="32").passed


def test_5dissection_fault_injection():
    # replace the 5 q^4 bracket coefficient of the reciprocal dissection
    # by 4: the comparison must fail exactly at exponent 4
    order = 150
    lhs, rhs = five_dissection_sides(order)["32"]
    corrupted = rhs - eta_series({25: 5, 5: -6}, order).shift(4)
    assert lhs.first_diff(corrupted) == 4
    assert lhs.first_diff(rhs) is None


def test_5dissections_preconditions():
    with pytest.raises(ValueError):
        verify_5dissections(24)
    with pytest.raises(ValueError):
        verify_5dissections(100, which="33")


def test_dissection_right_sides_multiply_to_one():
    order = 150
    sides = five_dissection_sides(order)
    product = sides["31"][1] * sides["32"][1]
    assert product.agree(Series.const(1, order))


# ----------------------------------------------------------------------
# K identities

def test_k_identities_pass():
    assert verify_K_identities(150).passed
    assert verify_K_identities(10).passed
    assert verify_K_identities(150, which="33").passed
    assert verify_K_identities(150, which="34").passed


def test_k_identity_fault_injection():
    # corrupting the q^-1 coefficient of K must surface at exponent -1
    order = 150
    k = named_series("K", order)
    bad = k + Series.monomial(1, -1, order)
    rhs = eta_series({1: -2, 2: 4, 5: 2, 10: -4}, order, shift=-1)
    assert (bad + 1).first_diff(rhs) == -1


def test_k_identities_preconditions():
    with pytest.raises(ValueError):
        verify_K_identities(9)
    with pytest.raises(ValueError):
        verify_K_identities(100, which="35")


def test_rr_stretch_consistency():
    assert rr_stretch(5, 60).agree(rr_stretch(1, 12).stretch(5))
