"""Power series in t truncated at a fixed order."""

from ..errors import NonUnitReciprocal
from .bilaurent import BiLaurent
from .rational import is_rational, to_fraction


class TruncatedSeries(object):
    """Exact arithmetic modulo ``t^(order+1)``.

    :param coeffs: coefficients of ``t^0, t^1, ...``; padded with zeros or
        cut to ``order + 1`` entries.
    :param order: the largest power of t kept.
    :param var: name of the series variable, only used for printing.
    """
    __slots__ = ('coeffs', 'order', 'var')

    def __init__(self, coeffs, order, var='t'):
        if order < 0:
            raise ValueError("Series order must be non-negative, got %d" %
                             order)
        coeffs = list(coeffs)[:order + 1]
        zero = coeffs[0] * 0 if coeffs else 0
        coeffs.extend([zero] * (order + 1 - len(coeffs)))
        self.coeffs = tuple(coeffs)
        self.order = order
        self.var = var

    @classmethod
    def variable(cls, order, one=1, var='t'):
        return cls([one * 0, one], order, var)

    @classmethod
    def constant(cls, value, order, var='t'):
        return cls([value], order, var)

    def coefficient(self, n):
        if n > self.order:
            raise IndexError("Coefficient of t^%d beyond order %d" %
                             (n, self.order))
        return self.coeffs[n]

    def truncate(self, order):
        return TruncatedSeries(self.coeffs, min(order, self.order), self.var)

    def _align(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        if is_rational(other) or isinstance(other, BiLaurent):
            return TruncatedSeries([other], self.order, self.var)
        return None

    def __eq__(self, other):
        other = self._align(other)
        if other is None:
            return NotImplemented
        order = min(self.order, other.order)
        return all(self.coeffs[n] == other.coeffs[n]
                   for n in range(order + 1))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order, self.var)

    def __add__(self, other):
        other = self._align(other)
        if other is None:
            return NotImplemented
        order = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[n] + other.coeffs[n]
                                for n in range(order + 1)], order, self.var)
    __radd__ = __add__

    def __sub__(self, other):
        other = self._align(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_rational(other) or isinstance(other, BiLaurent):
            return TruncatedSeries([c * other for c in self.coeffs],
                                   self.order, self.var)
        other = self._align(other)
        if other is None:
            return NotImplemented
        order = min(self.order, other.order)
        coeffs = []
        for n in range(order + 1):
            total = self.coeffs[0] * other.coeffs[n]
            for k in range(1, n + 1):
                total = total + self.coeffs[k] * other.coeffs[n - k]
            coeffs.append(total)
        return TruncatedSeries(coeffs, order, self.var)
    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by ``t^k``."""
        zero = self.coeffs[0] * 0
        return TruncatedSeries([zero] * k + list(self.coeffs), self.order,
                               self.var)

    def reciprocal(self):
        """Inverse series of a series with invertible constant term.

        :raises NonUnitReciprocal: if the constant term is not a unit
            (zero, or a BiLaurent other than a rational multiple of a power
            of q).
        """
        inverse = _unit_inverse(self.coeffs[0])
        result = [inverse]
        for n in range(1, self.order + 1):
            total = self.coeffs[1] * result[n - 1]
            for k in range(2, n + 1):
                total = total + self.coeffs[k] * result[n - k]
            result.append(-inverse * total)
        return TruncatedSeries(result, self.order, self.var)

    def __truediv__(self, other):
        other = self._align(other)
        if other is None:
            return NotImplemented
        return self * other.reciprocal()
    __div__ = __truediv__

    def __str__(self):
        parts = []
        for (n, c) in enumerate(self.coeffs):
            if c == 0:
                continue
            parts.append("(%s)*%s^%d" % (c, self.var, n) if n else
                         "(%s)" % c)
        parts.append("O(%s^%d)" % (self.var, self.order + 1))
        return " + ".join(parts)

    def __repr__(self):
        return "TruncatedSeries(%s)" % self


def _unit_inverse(value):
    if isinstance(value, BiLaurent):
        if not value.is_unit():
            raise NonUnitReciprocal("Constant term %s is not invertible" %
                                    value)
        return value ** -1
    if value == 0:
        raise NonUnitReciprocal("Constant term is zero")
    return 1 / to_fraction(value)
