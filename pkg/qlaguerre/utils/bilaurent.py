"""Sparse polynomials in y (non-negative powers) and q (Laurent powers).

A :py:class:`BiLaurent` is an immutable mapping from exponent pairs
``(e_y, e_q)`` to non-zero rational coefficients.  Instances mix freely with
ints and Fractions in arithmetic, and ``/`` is *exact* division: it either
returns the polynomial quotient or raises :py:class:`NotDivisible`.

The canonical text form sorts terms by ``(e_y, e_q)`` ascending, e.g.::

    >>> str(Y + (3 + Q) * Y**2 + Y**3)
    '1*y + 3*y^2 + 1*y^2*q + 1*y^3'
"""

import re

from ..errors import DivisionByZero, NotDivisible, PoleAtZero
from .rational import format_rational, is_rational, normalize, \
    parse_rational, to_fraction, to_rational

EXPONENT_LIMIT = 2**31 - 1
DEFAULT_NAMES = ('y', 'q')

_SIGN_RE = re.compile(r' ([+-]) ')


class BiLaurent(object):
    """Polynomial in y with Laurent-polynomial-in-q rational coefficients.

    :param terms: dict mapping ``(e_y, e_q)`` to int/Fraction coefficients;
        zero coefficients are dropped.
    """
    __slots__ = ('_terms', '_hash')

    def __init__(self, terms=None):
        clean = dict()
        for (key, coeff) in (terms or {}).items():
            (ey, eq) = key
            if not isinstance(ey, int) or not isinstance(eq, int):
                raise TypeError("Exponents must be ints, got %r" % (key, ))
            if ey < 0:
                raise ValueError("y-exponent must be non-negative, got %d" %
                                 ey)
            _check_range(ey, eq)
            coeff = to_rational(coeff)
            if coeff != 0:
                clean[(ey, eq)] = clean.get((ey, eq), 0) + coeff
                if clean[(ey, eq)] == 0:
                    del clean[(ey, eq)]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        """Wrap an already-clean dict without validation."""
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, value):
        return cls({(0, 0): value})

    @classmethod
    def monomial(cls, coeff=1, ey=0, eq=0):
        return cls({(ey, eq): coeff})

    # Inspection
    @property
    def terms(self):
        """Sorted tuple of ``((e_y, e_q), coeff)`` pairs."""
        return tuple(sorted(self._terms.items()))

    def coefficient(self, ey, eq):
        return self._terms.get((ey, eq), 0)

    def coefficient_of_y(self, ey):
        """The q-Laurent polynomial multiplying ``y^ey``."""
        return BiLaurent._raw(dict(((0, eq), c) for ((e, eq), c) in
                                   self._terms.items() if e == ey))

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(key == (0, 0) for key in self._terms)

    def is_monomial(self):
        return len(self._terms) == 1

    def is_unit(self):
        """True for non-zero rational multiples of a power of q."""
        return self.is_monomial() and next(iter(self._terms))[0] == 0

    def constant_term(self):
        return self._terms.get((0, 0), 0)

    def degree_y(self):
        if not self._terms:
            return -1
        return max(ey for (ey, _) in self._terms)

    def min_q(self):
        return min(eq for (_, eq) in self._terms) if self._terms else 0

    def max_q(self):
        return max(eq for (_, eq) in self._terms) if self._terms else 0

    def has_negative_q(self):
        return any(eq < 0 for (_, eq) in self._terms)

    def is_integral(self):
        return all(isinstance(normalize(c), int)
                   for c in self._terms.values())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)
    __nonzero__ = __bool__

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # Ring operations
    def __neg__(self):
        return BiLaurent._raw(dict((k, -c) for (k, c) in self._terms.items()))

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for (key, coeff) in other._terms.items():
            value = terms.get(key, 0) + coeff
            if value == 0:
                terms.pop(key, None)
            else:
                terms[key] = value
        return BiLaurent._raw(terms)
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
        if is_rational(other):
            if other == 0:
                return ZERO
            return BiLaurent._raw(dict((k, c * other)
                                       for (k, c) in self._terms.items()))
        other = _coerce(other)
        if other is None:
            return NotImplemented

        terms = dict()
        for ((ay, aq), ac) in self._terms.items():
            for ((by, bq), bc) in other._terms.items():
                key = (ay + by, aq + bq)
                _check_range(*key)
                value = terms.get(key, 0) + ac * bc
                if value == 0:
                    terms.pop(key, None)
                else:
                    terms[key] = value
        return BiLaurent._raw(terms)
    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if not self.is_unit():
                raise NotDivisible("%s has no inverse in the ring" % self)
            ((ey, eq), coeff) = next(iter(self._terms.items()))
            return BiLaurent({(0, eq * exponent): normalize(
                to_fraction(coeff) ** exponent)})
        if exponent > EXPONENT_LIMIT:
            raise OverflowError("Power %d too large" % exponent)

        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __truediv__(self, other):
        if is_rational(other):
            if other == 0:
                raise DivisionByZero("Division of %s by zero" % self)
            inverse = 1 / to_fraction(other)
            return BiLaurent._raw(dict((k, normalize(c * inverse))
                                       for (k, c) in self._terms.items()))
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return exact_div(self, other)
    __div__ = __truediv__

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return exact_div(other, self)
    __rdiv__ = __rtruediv__

    # Substitution
    def substitute(self, y=None, q=None):
        """Replace y and/or q by rational values.

        :returns: a BiLaurent in the variables left free.
        :raises PoleAtZero: when q = 0 meets a negative q-exponent.
        """
        if q is not None and q == 0 and self.has_negative_q():
            raise PoleAtZero("q = 0 substituted into %s" % self)
        y = None if y is None else to_fraction(y)
        q = None if q is None else to_fraction(q)

        terms = dict()
        for ((ey, eq), coeff) in self._terms.items():
            if y is not None:
                coeff = coeff * y**ey
                ey = 0
            if q is not None:
                coeff = coeff * q**eq
                eq = 0
            key = (ey, eq)
            terms[key] = terms.get(key, 0) + coeff
        return BiLaurent(dict((k, normalize(c)) for (k, c) in terms.items()))

    def eval_at(self, y, q):
        """Exact value at the rational point ``(y, q)``."""
        return self.substitute(y=y, q=q).constant_term()

    # Text and JSON forms
    def to_text(self, names=DEFAULT_NAMES):
        if not self._terms:
            return "0"

        parts = []
        for ((ey, eq), coeff) in sorted(self._terms.items()):
            body = format_rational(abs(coeff))
            body += _factor(names[0], ey) + _factor(names[1], eq)
            if not parts:
                parts.append(("-" if coeff < 0 else "") + body)
            else:
                parts.append(("- " if coeff < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return "BiLaurent('%s')" % self.to_text()

    @classmethod
    def parse(cls, text, names=DEFAULT_NAMES):
        """Inverse of :py:meth:`to_text`."""
        text = text.strip()
        if text == "0":
            return ZERO

        pieces = _SIGN_RE.split(text)
        signs = ['+'] + pieces[1::2]
        terms = dict()
        for (sign, body) in zip(signs, pieces[0::2]):
            factors = body.split('*')
            coeff = parse_rational(factors[0])
            if sign == '-':
                coeff = -coeff
            (ey, eq) = (0, 0)
            for factor in factors[1:]:
                (name, _, power) = factor.partition('^')
                power = int(power) if power else 1
                if name == names[0]:
                    ey += power
                elif name == names[1]:
                    eq += power
                else:
                    raise ValueError("Unknown variable '%s' in '%s'" %
                                     (name, text))
            terms[(ey, eq)] = terms.get((ey, eq), 0) + coeff
        return cls(terms)

    def to_json_dict(self, names=DEFAULT_NAMES):
        return {"terms": [{names[0]: ey, names[1]: eq,
                           "coeff": format_rational(coeff)}
                          for ((ey, eq), coeff) in self.terms]}

    @classmethod
    def from_json_dict(cls, data, names=DEFAULT_NAMES):
        return cls(dict(((t[names[0]], t[names[1]]),
                         parse_rational(t["coeff"])) for t in data["terms"]))


def _check_range(ey, eq):
    if abs(ey) > EXPONENT_LIMIT or abs(eq) > EXPONENT_LIMIT:
        raise OverflowError("Exponent pair %r out of range" % ((ey, eq), ))


def _factor(name, power):
    if power == 0:
        return ""
    if power == 1:
        return "*%s" % name
    return "*%s^%d" % (name, power)


def _coerce(value):
    if isinstance(value, BiLaurent):
        return value
    if is_rational(value):
        return BiLaurent.constant(value)
    return None


def exact_div(a, b):
    """Exact quotient ``c`` with ``a == b * c``.

    Both operands are shifted to ordinary polynomials in (y, q) and divided
    with the lexicographic (y first) leading-term order; the quotient of two
    such polynomials with q-free lowest parts is again a polynomial.

    :raises DivisionByZero: if ``b`` is zero.
    :raises NotDivisible: if ``b`` does not divide ``a``.
    """
    a = _coerce(a)
    b = _coerce(b)
    if b.is_zero():
        raise DivisionByZero("Division of %s by zero" % a)
    if a.is_zero():
        return ZERO
    if b.is_unit():
        return a * b**-1

    a_shift = a.min_q()
    b_shift = b.min_q()
    remainder = dict(((ey, eq - a_shift), c) for ((ey, eq), c)
                     in a._terms.items())
    divisor = [((ey, eq - b_shift), to_fraction(c)) for ((ey, eq), c)
               in b._terms.items()]
    ((ly, lq), lc) = max(divisor)

    quotient = dict()
    while remainder:
        ((ry, rq), rc) = max(remainder.items())
        if ry < ly or rq < lq:
            raise NotDivisible("%s is not divisible by %s" % (a, b))
        (qy, qq) = (ry - ly, rq - lq)
        _check_range(qy, qq + a_shift - b_shift)
        factor = rc / lc
        quotient[(qy, qq + a_shift - b_shift)] = normalize(factor)
        for ((dy, dq), dc) in divisor:
            key = (dy + qy, dq + qq)
            value = remainder.get(key, 0) - factor * dc
            if value == 0:
                remainder.pop(key, None)
            else:
                remainder[key] = normalize(value)
    return BiLaurent._raw(quotient)


ZERO = BiLaurent()
ONE = BiLaurent.constant(1)
Y = BiLaurent.monomial(1, ey=1)
Q = BiLaurent.monomial(1, eq=1)
