"""Tests for truncated power series.
"""

from fractions import Fraction

import pytest

from qlaguerre.errors import NonUnitReciprocal
from qlaguerre.utils.bilaurent import ONE, Q, Y
from qlaguerre.utils.series import TruncatedSeries


def test_geometric_series():
    s = TruncatedSeries([1, -1], 3).reciprocal()
    assert list(s.coeffs) == [1, 1, 1, 1]


def test_product_truncates():
    a = TruncatedSeries([1, 1], 2)
    b = TruncatedSeries([1, -1], 2)
    assert list((a * b).coeffs) == [1, 0, -1]


def test_symbolic_reciprocal():
    s = TruncatedSeries([ONE, -Y], 4).reciprocal()
    assert list(s.coeffs) == [ONE, Y, Y**2, Y**3, Y**4]


def test_unit_constant_may_be_a_power_of_q():
    s = TruncatedSeries([2 * Q, ONE], 2).reciprocal()
    assert s.coeffs[0] == Fraction(1, 2) * Q**-1
    assert (s * TruncatedSeries([2 * Q, ONE], 2)) == TruncatedSeries([ONE],
                                                                       2)


def test_non_unit_reciprocal():
    with pytest.raises(NonUnitReciprocal):
        TruncatedSeries([0, 1], 3).reciprocal()
    with pytest.raises(NonUnitReciprocal):
        TruncatedSeries([1 + Q, ONE], 3).reciprocal()
    with pytest.raises(NonUnitReciprocal):
        TruncatedSeries([Y], 3).reciprocal()


def test_mixed_orders_and_shift():
    a = TruncatedSeries([1, 2, 3], 5)
    b = TruncatedSeries([1, 1], 2)
    assert (a + b).order == 2
    assert list(a.shift(2).coeffs) == [0, 0, 1, 2, 3, 0]
    assert a.truncate(1) == TruncatedSeries([1, 2], 1)


def test_division():
    t = TruncatedSeries.variable(3)
    s = t / (1 - t)
    assert list(s.coeffs) == [0, 1, 1, 1]


def test_coefficient_beyond_order():
    with pytest.raises(IndexError):
        TruncatedSeries([1], 2).coefficient(3)


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
