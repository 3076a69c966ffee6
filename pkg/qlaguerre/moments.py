"""Moment sequences of the q-Laguerre, q-Charlier and Al-Salam-Chihara
functionals.

Every family has several independent routes to its moments: weighted
Motzkin paths from the Jacobi coefficients, closed sums, truncated
generating functions and (for Al-Salam-Chihara) the q-Stirling expansion.
"""

import logging
import threading

import numpy as np

from .errors import NotDivisible, NotPolynomial, PoleAtSample, TableTooShort
from .polynomials import ASCParams, jacobi_for, laguerre_jacobi
from .stirling import stirling_S
from .utils.bilaurent import ONE, Q, Y, BiLaurent
from .utils.qcalc import QFraction, binomial, q_binomial, q_factorial, \
    q_int, q_pochhammer
from .utils.rational import normalize, to_fraction
from .utils.series import TruncatedSeries

logger = logging.getLogger(__name__)

#: Variable names for printing q-Charlier moments, whose parameter is ``a``.
CHARLIER_NAMES = ('a', 'q')


class MomentTable(object):
    """A prefix ``mu_0, mu_1, ...`` of a moment sequence.

    Tables backed by a ``route`` grow on demand; ``route(n)`` must return the
    moments ``mu_0 .. mu_n``.  Tables built from a plain list raise
    :py:class:`TableTooShort` past their end.  Growth happens under a lock
    and replaces the stored prefix in one assignment, so concurrent readers
    see either the old or the new prefix.
    """
    def __init__(self, values=(), route=None, name="moments"):
        self._values = tuple(values)
        self._route = route
        self._lock = threading.Lock()
        self.name = name

    def __len__(self):
        return len(self._values)

    def ensure(self, n):
        """Make sure ``mu_n`` is available."""
        if n < len(self._values):
            return
        if self._route is None:
            raise TableTooShort("Table '%s' holds %d moments, mu_%d requested"
                                % (self.name, len(self._values), n))
        with self._lock:
            if n >= len(self._values):
                target = max(n, 2 * len(self._values))
                logger.debug("Extending '%s' to mu_%d", self.name, target)
                self._values = tuple(self._route(target))

    def __getitem__(self, n):
        if n < 0:
            raise IndexError("Moment index must be non-negative, got %d" % n)
        self.ensure(n)
        return self._values[n]

    def prefix(self, n):
        """``(mu_0, ..., mu_n)``."""
        self.ensure(n)
        return self._values[:n + 1]


_tables = dict()
_tables_lock = threading.Lock()


def moment_table(family):
    """The shared, lazily grown table for ``'laguerre'``, ``'charlier'`` or an
    :py:class:`ASCParams` instance.
    """
    with _tables_lock:
        if family not in _tables:
            jc = _family_jacobi(family)
            _tables[family] = MomentTable(
                route=lambda n: motzkin_moments(n, jc), name=str(family))
        return _tables[family]


def _family_jacobi(family):
    if family == "laguerre":
        return laguerre_jacobi()
    if family == "charlier":
        return jacobi_for(ASCParams.charlier())
    if isinstance(family, ASCParams):
        return jacobi_for(family)
    raise ValueError("Unknown moment family %r" % (family, ))


def _ring(value):
    zero = value * 0
    return (zero, zero + 1)


def motzkin_moments(n_max, jc):
    """``mu_0 .. mu_{n_max}`` as weighted Motzkin path sums.

    One pass of dynamic programming over path heights: level steps from
    height ``h`` weigh ``b_h``, down steps from ``h`` weigh ``lam_h`` and up
    steps weigh 1.  Only heights from which the path can still return to 0
    are kept.
    """
    if n_max < 0:
        raise ValueError("n must be non-negative, got %d" % n_max)
    (zero, one) = _ring(jc.b(0))
    weights = [one]
    moments = [one]
    for step in range(1, n_max + 1):
        width = min(len(weights) + 1, n_max - step + 1)
        new = [zero] * width
        for (h, w) in enumerate(weights):
            if w == 0:
                continue
            if h < width:
                new[h] = new[h] + w * jc.b(h)
            if h + 1 < width:
                new[h + 1] = new[h + 1] + w
            if h >= 1 and h - 1 < width:
                new[h - 1] = new[h - 1] + w * jc.lam(h)
        weights = new
        moments.append(weights[0])
    return moments


def moments_motzkin(n, jc):
    """The single moment ``mu_n``."""
    return motzkin_moments(n, jc)[n]


def moment_closed_laguerre(n):
    """``mu_n = sum_{k=1}^n y^k sum_{i=0}^{k-1} (-1)^i [k-i]_q^n q^(k(i-k))
    (C(n,i) q^(k-i) + C(n,i-1))``, with ``mu_0 = 1``.

    :raises NotPolynomial: if negative q-powers survive the sum.
    """
    if n < 0:
        raise ValueError("n must be non-negative, got %d" % n)
    if n == 0:
        return ONE
    total = BiLaurent()
    for k in range(1, n + 1):
        inner = BiLaurent()
        for i in range(k):
            inner = inner + ((-1)**i * q_int(k - i)**n * Q**(k * (i - k)) *
                             (binomial(n, i) * Q**(k - i) +
                              binomial(n, i - 1)))
        total = total + Y**k * inner
    if total.has_negative_q():
        raise NotPolynomial("Closed Laguerre moment mu_%d kept negative "
                            "q-powers: %s" % (n, total))
    return total


def moment_closed_charlier(n):
    """Closed q-Charlier moment in ``(a, q)``; ``a`` is stored as the first
    variable of the BiLaurent.

    ``sum_k a^k sum_{l=0}^k [k-l]_q^n (-1)^l / (k-l)!_q
    sum_{j=0}^l (1-q)^j / (l-j)!_q q^(C(l-j+1,2) - k(k-l))
    (C(n,j) q^(k-l) + C(n,j-1))``

    All denominators divide ``n!_q``, which is used as the common one.

    :raises NotPolynomial: if the sum is not a polynomial in ``q``.
    """
    if n < 0:
        raise ValueError("n must be non-negative, got %d" % n)
    if n == 0:
        return ONE
    total = QFraction(BiLaurent(), q_factorial(n))
    for k in range(1, n + 1):
        for l in range(k):
            outer = (-1)**l * q_int(k - l)**n * Y**k
            for j in range(l + 1):
                term = ((1 - Q)**j *
                        Q**((l - j + 1) * (l - j) // 2 - k * (k - l)) *
                        (binomial(n, j) * Q**(k - l) + binomial(n, j - 1)))
                total = total + QFraction(
                    outer * term, q_factorial(k - l) * q_factorial(l - j))
    try:
        value = total.reduce()
    except NotDivisible:
        raise NotPolynomial("Closed Charlier moment mu_%d is not a "
                            "polynomial in q" % n)
    if value.has_negative_q():
        raise NotPolynomial("Closed Charlier moment mu_%d kept negative "
                            "q-powers: %s" %
                            (n, value.to_text(CHARLIER_NAMES)))
    return value


def _divide(numerator, denominator):
    if isinstance(numerator, BiLaurent) or isinstance(denominator, BiLaurent):
        return numerator / denominator
    return normalize(to_fraction(numerator) / denominator)


def _family_gf_terms(family, k, q):
    """``(coefficient of t^k, factor_k)`` of the family's continued-fraction
    free generating function ``sum_k c_k t^k / prod_{i<=k} factor_i``.
    """
    if family in ("laguerre", "charlier") and not isinstance(q, BiLaurent):
        raise ValueError("The %s series is symbolic; pass ASCParams for a "
                         "rational point" % family)
    if family == "laguerre":
        return (q_factorial(k, q) * (q * Y)**k,
                [q**k, -q**k * q_int(k, q) + q_int(k, q) * Y])
    if family == "charlier":
        return ((Y * q)**k,
                [q**k, -q**k * q_int(k, q) + Y * (1 - q) * q_int(k, q)])
    if isinstance(family, ASCParams):
        (y, B) = (family.y, family.B)
        if not isinstance(q, BiLaurent):
            (y, B, q) = (to_fraction(y), to_fraction(B), to_fraction(q))
        numerator = _divide(q_pochhammer(B, k, q) * y**k, (1 - q)**k) * \
            q**-(k * (k - 1) // 2)
        return numerator, [q**0, -q_int(k, q) * (1 - y * q**-k)]
    raise ValueError("Unknown moment family %r" % (family, ))


def moment_gf_truncated(family, N, q=Q):
    """The moment generating function ``sum mu_n t^n`` modulo ``t^(N+1)``.

    :param family: ``'laguerre'``, ``'charlier'`` or an ASCParams; the
        latter may hold rationals together with a rational ``q``.
    :raises PoleAtSample: at ``q = 1`` for a rational Al-Salam-Chihara point.
    """
    if N < 0:
        raise ValueError("Order must be non-negative, got %d" % N)
    try:
        (first, _) = _family_gf_terms(family, 0, q)
        (zero, one) = _ring(first)
        total = TruncatedSeries([first], N)
        reciprocal = TruncatedSeries([one], N)
        for k in range(1, N + 1):
            (numerator, factor) = _family_gf_terms(family, k, q)
            reciprocal = reciprocal * TruncatedSeries(factor, N).reciprocal()
            total = total + reciprocal.shift(k) * numerator
    except ZeroDivisionError as err:
        if isinstance(err, PoleAtSample):
            raise
        raise PoleAtSample("Generating function of %s has a pole at q=%s" %
                           (family, q))
    return total


def asc_moment_stirling(n, params, q=Q):
    """``mu_n = sum_k S_q(n,k,y) (B;q)_k q^-C(k,2) (1-q)^-k y^k``.

    Symbolic values are divided exactly by ``(1-q)^k`` term by term.

    :raises PoleAtSample: for ``q = 1`` at a rational point.
    """
    (y, B) = (params.y, params.B)
    if not isinstance(q, BiLaurent):
        (y, B, q) = (to_fraction(y), to_fraction(B), to_fraction(q))
    (zero, one) = _ring(y * q)
    if n == 0:
        return one
    total = zero
    try:
        for k in range(1, n + 1):
            total = total + stirling_S(n, k, y, q) * q**-(k * (k - 1) // 2) * \
                _divide(q_pochhammer(B, k, q) * y**k, (1 - q)**k)
    except ZeroDivisionError as err:
        if isinstance(err, PoleAtSample):
            raise
        raise PoleAtSample("Stirling moment mu_%d has a pole at q=%s" % (n, q))
    return total


def asc_moment_explicit(n, params, q):
    """Explicit Al-Salam-Chihara moment at a rational point:

    ``sum_{k=1}^n sum_{i=1}^k [k,i]_q q^(k-i^2) y^i / (q;q)_k
    ([i]_q(1 - q^-i y))^n (B;q)_k /
    ((q^(1-2i) y; q)_i (q^(1+2i)/y; q)_{k-i})``

    :raises PoleAtSample: when a denominator vanishes.
    """
    (y, B, q) = (to_fraction(params.y), to_fraction(params.B), to_fraction(q))
    if n == 0:
        return 1
    try:
        total = 0
        for k in range(1, n + 1):
            for i in range(1, k + 1):
                total += (q_binomial(k, i, q) * q**(k - i * i) * y**i /
                          q_pochhammer(q, k, q) *
                          (q_int(i, q) * (1 - q**-i * y))**n *
                          q_pochhammer(B, k, q) /
                          (q_pochhammer(q**(1 - 2 * i) * y, i, q) *
                           q_pochhammer(q**(1 + 2 * i) / y, k - i, q)))
    except ZeroDivisionError:
        raise PoleAtSample("Explicit moment mu_%d has a pole at y=%s, B=%s, "
                           "q=%s" % (n, y, B, q))
    return normalize(total)


def functional_apply(p, table):
    """``L(p) = sum_m p_m mu_m`` for an XPoly ``p``.

    :param table: a MomentTable or a sequence of moments.
    :raises TableTooShort: if ``deg p`` exceeds the available moments.
    """
    if not isinstance(table, MomentTable):
        table = MomentTable(table)
    total = 0
    for (m, c) in enumerate(p.coeffs):
        if c != 0:
            total = total + c * table[m]
    return total


def derangement_polynomial(n, table=None):
    """``d_n = sum_k (-1)^(n-k) C(n,k) y^(n-k) mu_k``; by inversion of
    ``mu_n = sum_k C(n,k) y^k d_{n-k}`` this is the (wex, cr) polynomial of
    the derangements of ``[n]``.
    """
    if table is None:
        table = moment_table("laguerre")
    elif not isinstance(table, MomentTable):
        table = MomentTable(table)
    total = BiLaurent()
    for k in range(n + 1):
        total = total + (-1)**(n - k) * binomial(n, k) * Y**(n - k) * table[k]
    return total


def _exact(a, b):
    if isinstance(a, BiLaurent) or isinstance(b, BiLaurent):
        return a / b
    return normalize(to_fraction(a) / b)


def hankel_determinant(table, n):
    """``det(mu_{i+j})_{0 <= i, j <= n}`` by fraction-free elimination.

    Every Bareiss quotient is exact, so symbolic moments stay in the
    Laurent ring.
    """
    if not isinstance(table, MomentTable):
        table = MomentTable(table)
    size = n + 1
    matrix = np.empty((size, size), dtype=object)
    for i in range(size):
        for j in range(size):
            matrix[i, j] = table[i + j]

    sign = 1
    previous = 1
    for k in range(size - 1):
        if matrix[k, k] == 0:
            rows = [r for r in range(k + 1, size) if matrix[r, k] != 0]
            if not rows:
                return matrix[0, 0] * 0
            matrix[[k, rows[0]]] = matrix[[rows[0], k]]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                matrix[i, j] = _exact(matrix[i, j] * matrix[k, k] -
                                      matrix[i, k] * matrix[k, j], previous)
        previous = matrix[k, k]
    return sign * matrix[size - 1, size - 1]


def hankel_product(jc, n):
    """``prod_{k=1}^n lam_k^(n+1-k)``, the Hankel determinant predicted by
    the Jacobi coefficients.
    """
    (_, value) = _ring(jc.b(0))
    for k in range(1, n + 1):
        value = value * jc.lam(k)**(n + 1 - k)
    return value
