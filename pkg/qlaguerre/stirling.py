"""y-versions of the q-Stirling numbers.

``S_q(n, k, y)`` and ``s_q(n, k, y)`` are the connection coefficients
between the powers ``X^n`` and the products
``prod_{j<n}(X - [j]_q (1 - y q^-j))``.  Both are computed for symbolic
``(y, q)`` by default and for rational points when values are passed.
"""

import functools
import logging

import numpy as np

from .errors import PoleAtSample
from .utils.bilaurent import ONE, Q, Y, BiLaurent
from .utils.qcalc import q_binomial, q_factorial, q_int, q_pochhammer
from .utils.rational import normalize, to_fraction
from .utils.xpoly import XPoly

logger = logging.getLogger(__name__)


def _unit(y, q):
    return ONE if isinstance(y, BiLaurent) or isinstance(q, BiLaurent) else 1


def _point(y, q):
    """Rational arguments as Fractions, so that negative powers stay exact."""
    if not isinstance(y, BiLaurent):
        y = to_fraction(y)
    if not isinstance(q, BiLaurent):
        q = to_fraction(q)
    return (y, q)


@functools.lru_cache(maxsize=None)
def stirling_S(n, k, y=Y, q=Q):
    """Second kind, by ``S(n,k) = S(n-1,k-1) + [k]_q (1 - y q^-k) S(n-1,k)``
    with ``S(0,0) = 1``; zero outside ``0 <= k <= n``.
    """
    (y, q) = _point(y, q)
    one = _unit(y, q)
    if k < 0 or k > n:
        return one * 0
    if n == 0:
        return one
    return (stirling_S(n - 1, k - 1, y, q) +
            q_int(k, q) * (1 - y * q**-k) * stirling_S(n - 1, k, y, q))


@functools.lru_cache(maxsize=None)
def falling_product(n, y=Y, q=Q):
    """``prod_{j=0}^{n-1} (X - [j]_q (1 - y q^-j))`` as an XPoly."""
    (y, q) = _point(y, q)
    one = _unit(y, q)
    x = XPoly.x(one)
    result = XPoly([one])
    for j in range(n):
        result = result * (x - q_int(j, q) * (1 - y * q**-j))
    return result


def stirling_s(n, k, y=Y, q=Q):
    """First kind: the coefficient of ``X^k`` in :py:func:`falling_product`."""
    if k < 0 or k > n:
        return _unit(y, q) * 0
    return _unit(y, q) * falling_product(n, y, q).coefficient(k)


def stirling_matrices(n_max, y=Y, q=Q):
    """Lower-triangular object arrays ``(S, s)`` indexed ``[n, k]`` for
    ``0 <= n, k <= n_max``.
    """
    size = n_max + 1
    big = np.empty((size, size), dtype=object)
    small = np.empty((size, size), dtype=object)
    for n in range(size):
        for k in range(size):
            big[n, k] = stirling_S(n, k, y, q)
            small[n, k] = stirling_s(n, k, y, q)
    return big, small


def inversion_defects(n_max, y=Y, q=Q):
    """Entries where ``S s`` or ``s S`` differ from the identity.

    :returns: list of ``(product, n, k)`` triples; empty when both matrix
        products are the identity.
    """
    (big, small) = stirling_matrices(n_max, y, q)
    defects = []
    for (label, product) in (("S*s", np.dot(big, small)),
                             ("s*S", np.dot(small, big))):
        for n in range(n_max + 1):
            for k in range(n_max + 1):
                if product[n, k] != (1 if n == k else 0):
                    defects.append((label, n, k))
    return defects


def classical_stirling2(n, k):
    """Stirling numbers of the second kind."""
    return _stirling2_family(n, k, lambda j: j)


def q_stirling2(n, k):
    """The q-analogue with ``S(n,k) = S(n-1,k-1) + [k]_q S(n-1,k)``."""
    return _stirling2_family(n, k, q_int)


def _stirling2_family(n, k, weight):
    row = [1]
    for m in range(1, n + 1):
        row = [(row[j - 1] if j > 0 else 0) +
               (weight(j) * row[j] if j < m else 0) for j in range(m + 1)]
    if k < 0 or k > n:
        return 0
    return row[k]


def stirling_closed(n, k, y, q):
    """Closed form of ``S_q(n, k, y)`` at a rational point:

    ``q^-C(k,2)/k!_q * sum_{i=1}^k [k,i]_q y^(i-k) q^(k^2-i^2)
    ([i]_q(1 - q^-i y))^n / ((q^(1-2i) y; q)_i (q^(1+2i)/y; q)_{k-i})``

    :raises PoleAtSample: when one of the Pochhammer denominators vanishes.
    """
    (y, q) = (to_fraction(y), to_fraction(q))
    if n == 0 or k == 0:
        return 1 if n == k else 0
    if k < 0 or k > n:
        return 0
    try:
        total = 0
        for i in range(1, k + 1):
            total += (q_binomial(k, i, q) * y**(i - k) * q**(k * k - i * i) *
                      (q_int(i, q) * (1 - q**-i * y))**n /
                      (q_pochhammer(q**(1 - 2 * i) * y, i, q) *
                       q_pochhammer(q**(1 + 2 * i) / y, k - i, q)))
        return normalize(q**-(k * (k - 1) // 2) / q_factorial(k, q) * total)
    except ZeroDivisionError:
        raise PoleAtSample("S_q(%d,%d) closed form has a pole at y=%s, q=%s" %
                           (n, k, y, q))


def partial_fraction_gamma(k, i, y, q):
    """Coefficient of ``1/(1 - [i]_q t (1 - q^-i y))`` in the partial
    fraction decomposition of ``t^k / prod_{j=1}^k (1 - [j]_q t (1 - q^-j
    y))``:

    ``gamma_k(i) = [k,i]_q / k!_q * y^(i-k) q^(C(k,2)+k-i^2) /
    ((q^(1-2i) y; q)_i (q^(1+2i)/y; q)_{k-i})``

    :raises PoleAtSample: at a pole of the decomposition.
    """
    if not 0 <= i <= k:
        raise ValueError("Need 0 <= i <= k, got i=%d, k=%d" % (i, k))
    (y, q) = (to_fraction(y), to_fraction(q))
    try:
        return normalize(
            q_binomial(k, i, q) / q_factorial(k, q) * y**(i - k) *
            q**(k * (k - 1) // 2 + k - i * i) /
            (q_pochhammer(q**(1 - 2 * i) * y, i, q) *
             q_pochhammer(q**(1 + 2 * i) / y, k - i, q)))
    except ZeroDivisionError:
        raise PoleAtSample("gamma_%d(%d) has a pole at y=%s, q=%s" %
                           (k, i, y, q))


def partial_fraction_holds(k, y, q, ts):
    """Check the decomposition with denominators cleared at each ``t``.

    ``t^k == sum_i gamma_k(i) prod_{j != i} (1 - [j]_q t (1 - q^-j y))``
    is a polynomial identity of degree ``k`` in ``t``, so ``k + 1`` distinct
    values of ``t`` decide it.
    """
    (y, q) = (to_fraction(y), to_fraction(q))
    gammas = [partial_fraction_gamma(k, i, y, q) for i in range(k + 1)]
    slopes = [q_int(j, q) * (1 - q**-j * y) for j in range(k + 1)]
    for t in ts:
        rhs = 0
        for i in range(k + 1):
            factor = gammas[i]
            for j in range(1, k + 1):
                if j != i:
                    factor *= 1 - slopes[j] * t
            rhs += factor
        if rhs != to_fraction(t)**k:
            logger.debug("Partial fraction identity fails for k=%d at t=%s",
                         k, t)
            return False
    return True
