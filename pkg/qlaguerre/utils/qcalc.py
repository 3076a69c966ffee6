"""q-calculus primitives.

Every function takes the base ``q`` as a keyword argument defaulting to the
symbolic :py:data:`Q`, so the same code computes BiLaurent values and values
at a rational point (``q=Fraction(1, 3)``, or ``q=1`` for the classical
specialisation).
"""

import functools
from fractions import Fraction

from ..errors import DivisionByZero, NegativeIndex, NotDivisible, \
    NotPolynomial
from .bilaurent import ONE, Q, BiLaurent, exact_div


def _check_index(n):
    if n < 0:
        raise NegativeIndex("Index must be non-negative, got %d" % n)


def _one(q):
    if isinstance(q, BiLaurent):
        return q**0
    return Fraction(1) if isinstance(q, Fraction) else 1


@functools.lru_cache(maxsize=None, typed=True)
def q_int(n, q=Q):
    """``[n]_q = 1 + q + ... + q^(n-1)``."""
    _check_index(n)
    total = q * 0
    power = _one(q)
    for _ in range(n):
        total = total + power
        power = power * q
    return total


@functools.lru_cache(maxsize=None, typed=True)
def q_factorial(n, q=Q):
    """``n!_q = [1]_q [2]_q ... [n]_q``."""
    _check_index(n)
    result = _one(q)
    for j in range(1, n + 1):
        result = result * q_int(j, q)
    return result


@functools.lru_cache(maxsize=None, typed=True)
def _binomial_row(n, q):
    row = (_one(q), )
    for m in range(1, n + 1):
        row = tuple((row[k - 1] if k > 0 else 0) +
                    (q**k * row[k] if k < m else 0) for k in range(m + 1))
    return row


def q_binomial(n, k, q=Q):
    """Gaussian binomial ``[n choose k]_q``; zero when k < 0 or k > n.

    Built with the q-Pascal rule ``[n,k] = [n-1,k-1] + q^k [n-1,k]`` so that
    it specialises cleanly at ``q = 1``.
    """
    _check_index(n)
    if k < 0 or k > n:
        return q * 0
    return _binomial_row(n, q)[k]


def q_pochhammer(a, n, q=Q):
    """``(a;q)_n = (1-a)(1-aq)...(1-aq^(n-1))``."""
    _check_index(n)
    result = _one(q) * _one(a)
    power = _one(q)
    for _ in range(n):
        result = result * (1 - a * power)
        power = power * q
    return result


def binomial(n, k):
    """Ordinary binomial coefficient, zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    result = 1
    for j in range(1, k + 1):
        result = result * (n - k + j) // j
    return result


class QFraction(object):
    """A fraction whose denominator is a Laurent polynomial in q only.

    Used for closed forms whose individual terms carry q-factorial
    denominators while their sum is a polynomial.  Addition looks for a
    denominator dividing the other before falling back to the product, so
    that sums over q-factorials keep small denominators.
    """
    __slots__ = ('numerator', 'denominator')

    def __init__(self, numerator, denominator=ONE):
        if isinstance(denominator, BiLaurent):
            if denominator.is_zero():
                raise DivisionByZero("QFraction with zero denominator")
            if denominator.degree_y() > 0:
                raise NotPolynomial("Denominator %s depends on y" %
                                    denominator)
        elif denominator == 0:
            raise DivisionByZero("QFraction with zero denominator")
        self.numerator = numerator
        self.denominator = denominator

    @staticmethod
    def _lift(value):
        if isinstance(value, QFraction):
            return value
        return QFraction(value)

    def __add__(self, other):
        other = self._lift(other)
        (n1, d1, n2, d2) = (self.numerator, self.denominator,
                            other.numerator, other.denominator)
        if d1 == d2:
            return QFraction(n1 + n2, d1)
        try:
            return QFraction(n1 + n2 * exact_div(d1, d2), d1)
        except NotDivisible:
            pass
        try:
            return QFraction(n1 * exact_div(d2, d1) + n2, d2)
        except NotDivisible:
            return QFraction(n1 * d2 + n2 * d1, d1 * d2)
    __radd__ = __add__

    def __neg__(self):
        return QFraction(-self.numerator, self.denominator)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        other = self._lift(other)
        return QFraction(self.numerator * other.numerator,
                         self.denominator * other.denominator)
    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QFraction):
            return QFraction(self.numerator * other.denominator,
                             self.denominator * other.numerator)
        return QFraction(self.numerator, self.denominator * other)
    __div__ = __truediv__

    def reduce(self):
        """The exact polynomial value.

        :raises NotDivisible: if the denominator does not divide.
        """
        return exact_div(self.numerator, self.denominator)

    def __repr__(self):
        return "QFraction(%s, %s)" % (self.numerator, self.denominator)
