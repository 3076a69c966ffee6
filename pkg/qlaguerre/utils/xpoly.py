"""Dense polynomials in x over an exact coefficient ring.

Coefficients are either :py:class:`BiLaurent` values (symbolic families such
as the q-Laguerre polynomials) or plain rationals (Al-Salam-Chihara
polynomials at a rational point).  Only the ring operators are used on them.
"""

from .bilaurent import BiLaurent
from .rational import format_rational, is_rational


class XPoly(object):
    """Immutable polynomial ``sum(coeffs[m] * x**m)`` with trailing zeros
    trimmed, so that :py:attr:`degree` is the index of the last non-zero
    coefficient (``-1`` for the zero polynomial).
    """
    __slots__ = ('_coeffs', )

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def x(cls, one=1):
        """The polynomial x over the ring containing ``one``."""
        return cls([one * 0, one])

    @classmethod
    def constant(cls, value):
        return cls([value])

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1

    def coefficient(self, m):
        if 0 <= m < len(self._coeffs):
            return self._coeffs[m]
        return 0

    def leading(self):
        return self._coeffs[-1] if self._coeffs else 0

    def is_zero(self):
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)
    __nonzero__ = __bool__

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if len(self._coeffs) != len(other._coeffs):
            return False
        return all(a == b for (a, b) in zip(self._coeffs, other._coeffs))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self._coeffs)

    def __neg__(self):
        return XPoly([-c for c in self._coeffs])

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        (a, b) = (self._coeffs, other._coeffs)
        if len(a) < len(b):
            (a, b) = (b, a)
        return XPoly([c + b[m] if m < len(b) else c for (m, c) in
                      enumerate(a)])
    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            return XPoly([c * other for c in self._coeffs])
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return XPoly()

        zero = self._coeffs[0] * 0
        product = [zero] * (len(self._coeffs) + len(other._coeffs) - 1)
        for (i, a) in enumerate(self._coeffs):
            if a == 0:
                continue
            for (j, b) in enumerate(other._coeffs):
                product[i + j] = product[i + j] + a * b
        return XPoly(product)

    def __rmul__(self, other):
        if _is_scalar(other):
            return XPoly([other * c for c in self._coeffs])
        return NotImplemented

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        one = self._coeffs[0] ** 0 if self._coeffs else 1
        result = XPoly([one])
        for _ in range(exponent):
            result = result * self
        return result

    def map_coefficients(self, func):
        return XPoly([func(c) for c in self._coeffs])

    def eval_at(self, x, y=None, q=None):
        """Horner evaluation at ``x``.

        BiLaurent coefficients are first specialised at ``(y, q)`` when
        these are given.
        """
        value = 0
        for c in reversed(self._coeffs):
            if isinstance(c, BiLaurent) and (y is not None or q is not None):
                c = c.substitute(y=y, q=q)
                if c.is_constant():
                    c = c.constant_term()
            value = value * x + c
        return value

    def __call__(self, x):
        return self.eval_at(x)

    def compose(self, inner):
        """``self(inner(x))`` for another XPoly ``inner``."""
        result = XPoly()
        for c in reversed(self._coeffs):
            result = result * inner + c
        return result

    def to_text(self, names=None):
        """Descending powers of x, e.g. ``x^2 + (-1*y)*x + (1*y^2)``."""
        if not self._coeffs:
            return "0"
        parts = []
        for m in range(self.degree, -1, -1):
            c = self._coeffs[m]
            if c == 0:
                continue
            power = "" if m == 0 else ("x" if m == 1 else "x^%d" % m)
            if c == 1 and m > 0:
                parts.append(power)
            elif m == 0:
                parts.append("(%s)" % _coefficient_text(c, names))
            else:
                parts.append("(%s)*%s" % (_coefficient_text(c, names), power))
        return " + ".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return "XPoly('%s')" % self.to_text()


def _is_scalar(value):
    return is_rational(value) or isinstance(value, BiLaurent)


def _coerce(value):
    if isinstance(value, XPoly):
        return value
    if _is_scalar(value):
        return XPoly([value])
    return None


def _coefficient_text(c, names):
    if isinstance(c, BiLaurent):
        return c.to_text(names) if names else c.to_text()
    return format_rational(c)


def product(factors, one=1):
    """Product of an iterable of XPoly values."""
    result = XPoly([one])
    for f in factors:
        result = result * f
    return result
