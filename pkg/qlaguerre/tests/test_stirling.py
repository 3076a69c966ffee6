"""Tests for the y-versions of the q-Stirling numbers.
"""
from fractions import Fraction

import pytest

from qlaguerre import stirling
from qlaguerre.errors import PoleAtSample
from qlaguerre.utils.bilaurent import BiLaurent, ONE, Q, Y
from qlaguerre.utils.xpoly import XPoly


def test_small_values():
    assert stirling.stirling_S(0, 0) == ONE
    assert stirling.stirling_S(3, 0) == 0
    assert stirling.stirling_S(2, 3) == 0
    assert stirling.stirling_S(2, 1) == BiLaurent({(0, 0): 1, (1, -1): -1})
    assert stirling.stirling_S(4, 4) == ONE


def test_falling_product_and_first_kind():
    x = XPoly.x(ONE)
    slope = BiLaurent({(0, 0): 1, (1, -1): -1})
    assert stirling.falling_product(2) == x * (x - slope)
    assert stirling.stirling_s(2, 1) == -slope
    assert stirling.stirling_s(2, 2) == ONE
    assert stirling.stirling_s(1, 2) == 0


@pytest.mark.parametrize("y, q", [(Y, Q), (Fraction(1, 3), Fraction(2, 5)),
                                  (Y, 1)])
def test_inversion(y, q):
    assert stirling.inversion_defects(5, y, q) == []


def test_classical_and_q_families():
    assert stirling.classical_stirling2(4, 2) == 7
    assert stirling.classical_stirling2(5, 3) == 25
    assert stirling.q_stirling2(3, 2) == 2 + Q
    assert stirling.q_stirling2(3, 4) == 0


def test_specialisations():
    for n in range(6):
        for k in range(n + 1):
            assert stirling.stirling_S(n, k, Y, 1) == \
                stirling.classical_stirling2(n, k) * (1 - Y)**(n - k)
            assert stirling.stirling_S(n, k, 0, Q) == \
                stirling.q_stirling2(n, k)


@pytest.mark.parametrize("y, q", [(Fraction(1, 3), Fraction(2, 5)),
                                  (Fraction(-4, 7), 3),
                                  (5, Fraction(-1, 2))])
def test_closed_form(y, q):
    for n in range(6):
        for k in range(n + 1):
            assert stirling.stirling_closed(n, k, y, q) == \
                stirling.stirling_S(n, k, y, q)


def test_closed_form_pole():
    # (q^(1-2i) y; q)_i vanishes at i = 1 when y = q
    with pytest.raises(PoleAtSample):
        stirling.stirling_closed(3, 2, Fraction(1, 2), Fraction(1, 2))


@pytest.mark.parametrize("k", range(6))
def test_partial_fractions(k):
    ts = list(range(1, k + 3))
    assert stirling.partial_fraction_holds(k, Fraction(2, 3),
                                           Fraction(-3, 5), ts)


def test_partial_fraction_gamma_range():
    with pytest.raises(ValueError):
        stirling.partial_fraction_gamma(2, 3, 1, 2)


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
