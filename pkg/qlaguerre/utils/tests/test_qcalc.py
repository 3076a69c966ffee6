"""Tests for q-integers, q-factorials, Gaussian binomials and Pochhammers.
"""

from fractions import Fraction

import pytest

from qlaguerre.errors import DivisionByZero, NegativeIndex, NotDivisible, \
    NotPolynomial, QLaguerreError
from qlaguerre.utils.bilaurent import ONE, Q, Y, exact_div
from qlaguerre.utils.qcalc import QFraction, binomial, q_binomial, \
    q_factorial, q_int, q_pochhammer


def test_q_int():
    assert q_int(0) == 0
    assert q_int(3) == 1 + Q + Q**2
    assert q_int(5, q=1) == 5


def test_q_factorial():
    assert q_factorial(0) == 1
    assert q_factorial(3) == (1 + Q) * (1 + Q + Q**2)
    assert q_factorial(5, q=1) == 120


def test_q_binomial_values():
    assert q_binomial(4, 2) == 1 + Q + 2 * Q**2 + Q**3 + Q**4
    assert q_binomial(4, -1) == 0
    assert q_binomial(4, 5) == 0
    assert q_binomial(0, 0) == 1


def test_q_binomial_from_factorials():
    for n in range(8):
        for k in range(n + 1):
            ratio = exact_div(q_factorial(n),
                              q_factorial(k) * q_factorial(n - k))
            assert q_binomial(n, k) == ratio


def test_q_binomial_symmetry_and_pascal():
    for n in range(1, 13):
        for k in range(n + 1):
            assert q_binomial(n, k) == q_binomial(n, n - k)
            assert q_binomial(n, k) == (q_binomial(n - 1, k - 1) +
                                        Q**k * q_binomial(n - 1, k))
            assert q_binomial(n, k) == (Q**(n - k) * q_binomial(n - 1, k - 1)
                                        + q_binomial(n - 1, k))


def test_q_to_one_specialisation():
    for n in range(10):
        assert q_int(n).substitute(q=1) == n
        for k in range(n + 1):
            assert q_binomial(n, k).substitute(q=1) == binomial(n, k)


def test_q_pochhammer():
    assert q_pochhammer(Y, 2) == 1 - Y - Y * Q + Y**2 * Q
    assert q_pochhammer(Y, 0) == ONE
    assert q_pochhammer(Q, 3) == q_factorial(3) * (1 - Q)**3


def test_negative_index():
    for func in [q_int, q_factorial]:
        with pytest.raises(NegativeIndex):
            func(-1)
    with pytest.raises(NegativeIndex):
        q_pochhammer(Y, -2)
    with pytest.raises(ValueError):
        q_binomial(-1, 0)


def test_binomial():
    assert binomial(5, 2) == 10
    assert binomial(3, -1) == 0
    assert binomial(3, 4) == 0


def test_qfraction_sums():
    total = QFraction(ONE, q_factorial(2)) + QFraction(Q, q_factorial(3))
    assert total.denominator == q_factorial(3)
    value = (QFraction(q_factorial(3), q_factorial(2)) +
             QFraction(ONE, q_factorial(1)) * 2)
    assert value.reduce() == 3 + Q + Q**2
    with pytest.raises(NotDivisible):
        QFraction(ONE, 1 - Q).reduce()


def test_qfraction_rejects_y_denominator():
    with pytest.raises(NotPolynomial):
        QFraction(ONE, Y)


@pytest.mark.parametrize("denominator", [0, ONE - ONE])
def test_qfraction_zero_denominator(denominator):
    with pytest.raises(DivisionByZero) as excinfo:
        QFraction(ONE, denominator)
    assert isinstance(excinfo.value, QLaguerreError)


def test_empty_products_stay_exact_at_rational_q():
    q = Fraction(-2, 5)
    for value in (q_pochhammer(q, 0, q), q_factorial(0, q), q_int(1, q),
                  q_binomial(3, 0, q)):
        assert type(value) is Fraction
    ratio = q_pochhammer(q**-2, 0, q) / q_pochhammer(q, 0, q)
    assert type(ratio) is Fraction
    assert ratio == 1


def test_integer_and_fraction_bases_cached_apart():
    assert type(q_int(3, 2)) is int
    assert type(q_int(3, Fraction(2))) is Fraction
    assert q_int(3, 2) == q_int(3, Fraction(2)) == 7


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
