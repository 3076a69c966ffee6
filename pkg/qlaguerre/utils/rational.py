"""Exact rational scalars.

All coefficient arithmetic is done with :py:class:`fractions.Fraction`.
Integers are accepted wherever a rational is expected and are kept as plain
ints where possible.
"""

import numbers
import re
from fractions import Fraction

_RATIONAL_RE = re.compile(r'^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$')


def to_rational(value):
    """Coerce an int or Fraction to the canonical scalar type.

    :raises TypeError: for floats, complex numbers and anything non-numeric.
    """
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, Fraction):
        return normalize(value)
    if isinstance(value, numbers.Rational):
        return normalize(Fraction(value.numerator, value.denominator))
    raise TypeError("Expected an exact rational value, got %r" % (value, ))


def normalize(value):
    """Return an int for Fractions with unit denominator."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def is_rational(value):
    return (isinstance(value, (numbers.Integral, Fraction)) and
            not isinstance(value, bool))


def parse_rational(text):
    """Parse ``p`` or ``p/r`` into an exact rational.

    :param text: decimal integer or ratio of decimal integers.
    :returns: an int or a Fraction.
    :raises ValueError: on malformed input, floats or a zero denominator.
    """
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError("'%s' is not a rational of the form p or p/r" % text)

    numerator = int(match.group(1))
    if match.group(2) is None:
        return numerator

    denominator = int(match.group(2))
    if denominator == 0:
        raise ValueError("'%s' has a zero denominator" % text)
    return normalize(Fraction(numerator, denominator))


def format_rational(value):
    """Render a rational as ``p`` or ``p/r``."""
    value = to_rational(value)
    if isinstance(value, Fraction):
        return "%d/%d" % (value.numerator, value.denominator)
    return "%d" % value


def to_fraction(value):
    return Fraction(to_rational(value))
