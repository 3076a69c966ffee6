"""The polynomial families: q-Laguerre, Al-Salam-Chihara and their monic
three-term recurrence data.
"""

import functools
import logging
from fractions import Fraction

from .errors import NotPolynomial, PoleAtSample, UnknownMethod
from .utils.bilaurent import ONE, Q, Y, BiLaurent
from .utils.hypergeometric import phi
from .utils.qcalc import binomial, q_binomial, q_factorial, q_int, \
    q_pochhammer
from .utils.rational import normalize, to_fraction
from .utils.xpoly import XPoly

logger = logging.getLogger(__name__)

X = XPoly.x(ONE)


class ASCParams(object):
    """Al-Salam-Chihara parameters in the form ``y = 1/alpha^2``,
    ``B = alpha*beta``.

    Either entry may be a BiLaurent (symbolic) or a rational.
    """
    __slots__ = ('y', 'B')

    def __init__(self, y, B):
        self.y = y
        self.B = B

    @classmethod
    def laguerre(cls, y=Y, q=Q):
        """The q-Laguerre case ``alpha*beta = q``."""
        return cls(y, q)

    @classmethod
    def charlier(cls, a=Y, q=Q):
        """The q-Charlier case ``beta = 0``, ``y = a(1-q)``."""
        return cls(a * (1 - q), 0)

    @classmethod
    def from_alpha_beta(cls, alpha, beta):
        alpha = to_fraction(alpha)
        if alpha == 0:
            raise PoleAtSample("alpha = 0 has no y = 1/alpha^2")
        return cls(normalize(1 / alpha**2), normalize(alpha * beta))

    def __eq__(self, other):
        if not isinstance(other, ASCParams):
            return NotImplemented
        return self.y == other.y and self.B == other.B

    def __hash__(self):
        return hash((self.y, self.B))

    def __repr__(self):
        return "ASCParams(y=%s, B=%s)" % (self.y, self.B)


class JacobiCoefficients(object):
    """Monic recurrence data ``p_{n+1} = (x - b_n) p_n - lam_n p_{n-1}``.

    :param b: callable ``n -> b_n``
    :param lam: callable ``n -> lam_n`` (only used for ``n >= 1``)
    :param name: label used in log messages
    """
    def __init__(self, b, lam, name="jacobi"):
        self._b = b
        self._lam = lam
        self._b_cache = dict()
        self._lam_cache = dict()
        self.name = name

    def b(self, n):
        if n not in self._b_cache:
            self._b_cache[n] = self._b(n)
        return self._b_cache[n]

    def lam(self, n):
        if n not in self._lam_cache:
            self._lam_cache[n] = self._lam(n)
        return self._lam_cache[n]

    def polynomial(self, n):
        """The monic orthogonal polynomial of degree ``n``."""
        one = self.b(0) ** 0 if isinstance(self.b(0), BiLaurent) else 1
        x = XPoly.x(one)
        (previous, current) = (XPoly(), XPoly([one]))
        for m in range(n):
            step = (x - self.b(m)) * current
            if m:
                step = step - self.lam(m) * previous
            (previous, current) = (current, step)
        return current


def laguerre_jacobi():
    """``b_n = y[n+1]_q + [n]_q`` and ``lam_n = y[n]_q^2``."""
    return JacobiCoefficients(lambda n: Y * q_int(n + 1) + q_int(n),
                              lambda n: Y * q_int(n)**2, name="laguerre")


def jacobi_for(params, q=Q):
    """Jacobi coefficients of the rescaled Al-Salam-Chihara family.

    ``b_n = ((1+By)q^n - (1+y))/(q-1)`` and
    ``lam_n = y(1-q^n)(1-Bq^(n-1))/(1-q)^2``; symbolic arguments are reduced
    with exact division.

    :raises NotDivisible: if a symbolic reduction fails.
    :raises PoleAtSample: for ``q = 1`` at a rational point.
    """
    (y, B) = [v if isinstance(v, BiLaurent) else to_fraction(v)
              for v in (params.y, params.B)]
    if not isinstance(q, BiLaurent):
        q = to_fraction(q)
        if q == 1:
            raise PoleAtSample("q = 1 makes the recurrence singular")

    def b(n):
        return _quotient((1 + B * y) * q**n - (1 + y), q - 1)

    def lam(n):
        return _quotient(y * (1 - q**n) * (1 - B * q**(n - 1)), (1 - q)**2)

    return JacobiCoefficients(b, lam, name="asc")


def _quotient(numerator, denominator):
    if isinstance(numerator, BiLaurent) or isinstance(denominator, BiLaurent):
        return numerator / denominator
    return normalize(to_fraction(numerator) / denominator)


@functools.lru_cache(maxsize=None)
def laguerre_poly(n, method="recurrence"):
    """The q-Laguerre polynomial ``L_n(x; q)`` with parameter y.

    :param method: ``recurrence`` uses
        ``L_{n+1} = (x - y[n+1]_q - [n]_q) L_n - y[n]_q^2 L_{n-1}``;
        ``explicit`` sums the closed formula with its Laurent factors
        ``q^(k(k-n))``, which must cancel.
    :raises NotPolynomial: if negative q-powers survive the explicit sum.
    """
    if n < 0:
        raise ValueError("Degree must be non-negative, got %d" % n)
    if method == "recurrence":
        return laguerre_jacobi().polynomial(n)
    if method == "explicit":
        return _laguerre_explicit(n)
    raise UnknownMethod("Unknown method '%s' for laguerre_poly" % method)


def _laguerre_explicit(n):
    total = XPoly()
    falling = XPoly([ONE])
    for k in range(n + 1):
        coeff = ((-1)**(n - k) * (q_factorial(n) / q_factorial(k)) *
                 q_binomial(n, k) * Q**(k * (k - n)) * Y**(n - k))
        total = total + coeff * falling
        falling = falling * (X - (1 - Y * Q**-k) * q_int(k))

    if any(c.has_negative_q() for c in total):
        raise NotPolynomial("Explicit L_%d kept negative q-powers" % n)
    return total


def classical_laguerre(n, method="explicit"):
    """Monic classical Laguerre polynomials with rational coefficients.

    ``explicit``: ``sum_k (-1)^(n-k) n!/k! C(n,k) x^k``;
    ``recurrence``: ``L_{n+1} = (x - (2n+1)) L_n - n^2 L_{n-1}``.
    """
    x = XPoly.x()
    if method == "explicit":
        return XPoly([(-1)**(n - k) * falling_factorial(n, n - k) *
                      binomial(n, k) for k in range(n + 1)])
    if method == "recurrence":
        (previous, current) = (XPoly(), XPoly([1]))
        for m in range(n):
            (previous, current) = (current,
                                   (x - (2 * m + 1)) * current -
                                   m * m * previous)
        return current
    raise UnknownMethod("Unknown method '%s' for classical_laguerre" %
                        method)


@functools.lru_cache(maxsize=None)
def asc_Q(n, alpha, beta, q):
    """Al-Salam-Chihara ``Q_n(x; alpha, beta | q)`` by the recurrence
    ``Q_{n+1} = (2x - (alpha+beta)q^n) Q_n - (1-q^n)(1-alpha*beta*q^(n-1))
    Q_{n-1}``; leading coefficient ``2^n``.
    """
    if n < 0:
        raise ValueError("Degree must be non-negative, got %d" % n)
    (alpha, beta, q) = (to_fraction(alpha), to_fraction(beta),
                        to_fraction(q))
    x = XPoly.x()
    (previous, current) = (XPoly(), XPoly([1]))
    for m in range(n):
        step = (2 * x - (alpha + beta) * q**m) * current
        if m:
            step = step - (1 - q**m) * (1 - alpha * beta * q**(m - 1)) * \
                previous
        (previous, current) = (current, step.map_coefficients(normalize))
    return current


def asc_monic(n, alpha, beta, q):
    """``p_n = Q_n / 2^n``."""
    return asc_Q(n, alpha, beta, q).map_coefficients(
        lambda c: normalize(Fraction(c) / 2**n))


def asc_monic_jacobi(alpha, beta, q):
    """Normalized recurrence ``p_{n+1} = (x - (alpha+beta)q^n/2) p_n -
    (1-q^n)(1-alpha*beta*q^(n-1))/4 p_{n-1}``.
    """
    (alpha, beta, q) = (to_fraction(alpha), to_fraction(beta),
                        to_fraction(q))
    return JacobiCoefficients(
        lambda n: normalize((alpha + beta) * q**n / 2),
        lambda n: normalize((1 - q**n) * (1 - alpha * beta * q**(n - 1)) / 4),
        name="asc-normalized")


def asc_norm(n, alpha, beta, q):
    """``4^n * prod(lam_k, k = 1..n)`` from the normalized recurrence.

    For an orthogonality functional with ``L(1) = 1`` this is
    ``L(Q_n^2)``; it equals ``(q;q)_n (alpha*beta;q)_n``.
    """
    jacobi = asc_monic_jacobi(alpha, beta, q)
    value = Fraction(1)
    for k in range(1, n + 1):
        value *= 4 * jacobi.lam(k)
    return normalize(value)


def asc_hypergeometric(n, u, alpha, beta, q, form=1):
    """``Q_n((u + 1/u)/2)`` from one of the three terminating basic
    hypergeometric representations.

    1. ``(alpha*beta;q)_n alpha^-n 3phi2(q^-n, alpha*u, alpha/u;
       alpha*beta, 0; q, q)``
    2. ``(alpha*u;q)_n u^-n 2phi1(q^-n, beta/u; q^(1-n)/(alpha*u); q,
       q*u/alpha)``
    3. ``(beta/u;q)_n u^n 2phi1(q^-n, alpha*u; q^(1-n)*u/beta; q,
       q/(beta*u))``

    :raises PoleAtSample: if a parameter or denominator vanishes.
    """
    (u, alpha, beta, q) = [to_fraction(v) for v in (u, alpha, beta, q)]
    try:
        if u == 0 or q == 0:
            raise ZeroDivisionError("u and q must be non-zero")
        if form == 1:
            prefactor = q_pochhammer(alpha * beta, n, q) / alpha**n
            series = phi([q**-n, alpha * u, alpha / u], [alpha * beta, 0], q,
                         q)
        elif form == 2:
            prefactor = q_pochhammer(alpha * u, n, q) / u**n
            series = phi([q**-n, beta / u], [q**(1 - n) / (alpha * u)], q,
                         q * u / alpha)
        elif form == 3:
            prefactor = q_pochhammer(beta / u, n, q) * u**n
            series = phi([q**-n, alpha * u], [q**(1 - n) * u / beta], q,
                         q / (beta * u))
        else:
            raise UnknownMethod("Unknown hypergeometric form %r" % (form, ))
    except ZeroDivisionError as err:
        if isinstance(err, PoleAtSample):
            raise
        raise PoleAtSample("Form %s of Q_%d has a pole at u=%s: %s" %
                           (form, n, u, err))
    return normalize(prefactor * series)


def asc_rescaled(n, params, q):
    """``alpha^n P_n(X)`` for the rescaled family at a rational point.

    ``sum_k (q^-n;q)_k/(q;q)_k q^k (Bq^k;q)_{n-k} (1-q)^k q^C(k,2) y^-k
    prod_{j<k}(X - [j]_q(1 - y q^-j))``.  The moment functional of the
    Al-Salam-Chihara moments annihilates it for ``n >= 1``.
    """
    (y, B, q) = (to_fraction(params.y), to_fraction(params.B),
                 to_fraction(q))
    if y == 0 or q == 0:
        raise PoleAtSample("y and q must be non-zero")
    x = XPoly.x()
    total = XPoly()
    falling = XPoly([1])
    for k in range(n + 1):
        coeff = (q_pochhammer(q**-n, k, q) / q_pochhammer(q, k, q) * q**k *
                 q_pochhammer(B * q**k, n - k, q) * (1 - q)**k *
                 q**(k * (k - 1) // 2) / y**k)
        total = total + coeff * falling
        falling = falling * (x - q_int(k, q) * (1 - y * q**-k))
    return total.map_coefficients(normalize)


def falling_factorial(n, k):
    """``n (n-1) ... (n-k+1)``, i.e. ``n!/(n-k)!``."""
    result = 1
    for j in range(k):
        result *= n - j
    return result
