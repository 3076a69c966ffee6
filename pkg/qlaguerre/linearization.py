"""Linearization coefficients of the q-Laguerre and Al-Salam-Chihara
families.

``I(n_1, ..., n_k)`` is the moment functional applied to a product of
q-Laguerre polynomials.  It is computed three ways: through the functional,
by enumerating the generalized derangements ``D(n_1, ..., n_k)``, and for
``k = 3`` by a closed sum.
"""

import logging

from .errors import NotDivisible, NotPolynomial, PoleAtSample, SizeMismatch, \
    UnknownMethod
from .moments import functional_apply, moment_table
from .permstats import DEFAULT_CAP, BlockSpec, class_polynomial, class_rows
from .polynomials import asc_Q, classical_laguerre, laguerre_poly
from .utils.bilaurent import ONE, Q, Y, BiLaurent
from .utils.qcalc import QFraction, q_binomial, q_factorial, q_int, \
    q_pochhammer
from .utils.rational import normalize, to_fraction
from .utils.xpoly import XPoly

logger = logging.getLogger(__name__)

METHODS = ("functional", "enumeration", "closed3")
_ALIASES = {"enum": "enumeration"}


def linearize(b, method="functional", cap=DEFAULT_CAP, workers=1):
    """``I(n_1, ..., n_k)`` for the composition ``b``.

    :param method: ``functional`` applies the moment functional to
        ``L_{n_1} ... L_{n_k}``; ``enumeration`` (or ``enum``) sums
        ``y^wex q^cr`` over ``D(n_1, ..., n_k)``; ``closed3`` uses the closed
        sum, valid for three blocks only.
    :raises CapExceeded: for an enumeration beyond ``cap``.
    :raises SizeMismatch: for ``closed3`` with other than three blocks.
    :raises UnknownMethod: for any other method name.
    """
    b = b if isinstance(b, BlockSpec) else BlockSpec(b)
    method = _ALIASES.get(method, method)
    logger.debug("I(%s) by %s", b, method)
    if method == "functional":
        product = XPoly([ONE])
        for size in b.sizes:
            product = product * laguerre_poly(size)
        return functional_apply(product, moment_table("laguerre"))
    if method == "enumeration":
        return class_polynomial(b, cap=cap, workers=workers)
    if method == "closed3":
        if len(b) != 3:
            raise SizeMismatch("closed3 needs exactly three blocks, got %s" %
                               b)
        return closed3(*b.sizes)
    raise UnknownMethod("Unknown linearization method '%s'" % method)


def closed3(n1, n2, n3):
    """``I(n1, n2, n3) = sum_s n1!_q n2!_q n3!_q s!_q y^s /
    ((N-2s)!_q (s-n1)!_q (s-n2)!_q (s-n3)!_q)
    sum_k [N-2s, k]_q y^k q^(C(k+1,2) + C(N-2s-k,2))``

    with ``N = n1 + n2 + n3`` and ``max(n_i) <= s <= N/2``.

    :raises NotPolynomial: if the summed fraction does not reduce.
    """
    total_size = n1 + n2 + n3
    prefactor = q_factorial(n1) * q_factorial(n2) * q_factorial(n3)
    total = QFraction(BiLaurent(), q_factorial(total_size // 2))
    for s in range(max(n1, n2, n3), total_size // 2 + 1):
        free = total_size - 2 * s
        inner = BiLaurent()
        for k in range(free + 1):
            inner = inner + (q_binomial(free, k) * Y**k *
                             Q**(k * (k + 1) // 2 +
                                 (free - k) * (free - k - 1) // 2))
        denominator = (q_factorial(free) * q_factorial(s - n1) *
                       q_factorial(s - n2) * q_factorial(s - n3))
        total = total + QFraction(prefactor * q_factorial(s) * Y**s * inner,
                                  denominator)
    try:
        return total.reduce()
    except NotDivisible:
        raise NotPolynomial("Closed form of I(%d,%d,%d) does not reduce" %
                            (n1, n2, n3))


def laguerre_product_expansion(n1, n2):
    """Coefficients ``c`` with ``L_{n1} L_{n2} = sum_m c[m] L_m``.

    Found by eliminating the leading term with the monic ``L_m``; the list
    has ``n1 + n2 + 1`` entries.
    """
    remainder = laguerre_poly(n1) * laguerre_poly(n2)
    coeffs = [BiLaurent()] * (n1 + n2 + 1)
    for degree in range(n1 + n2, -1, -1):
        c = remainder.coefficient(degree)
        if c == 0:
            continue
        coeffs[degree] = c
        remainder = remainder - c * laguerre_poly(degree)
    return coeffs


def product_coefficient_from_I(n1, n2, n3):
    """``I(n1, n2, n3) / (y^n3 (n3!_q)^2)``, which by orthogonality is the
    coefficient of ``L_{n3}`` in ``L_{n1} L_{n2}``.
    """
    return closed3(n1, n2, n3) / (Y**n3 * q_factorial(n3)**2)


def asc_linearize_C(n1, n2, n3, alpha, beta, q, method="closed"):
    """Coefficient of ``Q_{n3}`` in ``Q_{n1} Q_{n2}`` at a rational point.

    ``closed``: ``(-1)^(n1+n2+n3) (q;q)_{n1} (q;q)_{n2} / (ab;q)_{n3}
    sum_{m2,m3} (ab;q)_{n1+m3} a^m2 b^M q^(C(m2,2)+C(M,2)) /
    ((q;q)_M (q;q)_m2 (q;q)_{m3+n1-n3} (q;q)_{m3+n1-n2} (q;q)_m3)``

    with ``M = n3 + n2 - n1 - m2 - 2 m3``; a term with a negative index
    vanishes.  ``basis`` expands the product in the ``Q`` basis by
    eliminating leading coefficients ``2^m``.

    :raises PoleAtSample: if a denominator vanishes at the point.
    """
    (alpha, beta, q) = (to_fraction(alpha), to_fraction(beta),
                        to_fraction(q))
    try:
        if method == "closed":
            return _asc_closed(n1, n2, n3, alpha, beta, q)
        if method == "basis":
            return _asc_basis(n1, n2, n3, alpha, beta, q)
    except ZeroDivisionError as err:
        if isinstance(err, PoleAtSample):
            raise
        raise PoleAtSample("C^%d_{%d,%d} has a pole at alpha=%s, beta=%s, "
                           "q=%s" % (n3, n1, n2, alpha, beta, q))
    raise UnknownMethod("Unknown method '%s' for asc_linearize_C" % method)


def _asc_closed(n1, n2, n3, alpha, beta, q):
    if n3 > n1 + n2 or n3 < abs(n1 - n2):
        return 0
    ab = alpha * beta
    reach = n3 + n2 - n1
    total = 0
    for m2 in range(reach + 1):
        for m3 in range(reach // 2 + 1):
            big_m = reach - m2 - 2 * m3
            lows = (big_m, m2, m3 + n1 - n3, m3 + n1 - n2, m3)
            if min(lows) < 0:
                continue
            denominator = 1
            for m in lows:
                denominator *= q_pochhammer(q, m, q)
            total += (q_pochhammer(ab, n1 + m3, q) * alpha**m2 * beta**big_m *
                      q**(m2 * (m2 - 1) // 2 + big_m * (big_m - 1) // 2) /
                      denominator)
    return normalize((-1)**(n1 + n2 + n3) * q_pochhammer(q, n1, q) *
                     q_pochhammer(q, n2, q) / q_pochhammer(ab, n3, q) * total)


def _asc_basis(n1, n2, n3, alpha, beta, q):
    coeffs = asc_product_expansion(n1, n2, alpha, beta, q)
    return coeffs[n3] if n3 < len(coeffs) else 0


def asc_product_expansion(n1, n2, alpha, beta, q):
    """Coefficients ``c`` with ``Q_{n1} Q_{n2} = sum_m c[m] Q_m`` at a
    rational point, by eliminating leading coefficients ``2^m``.
    """
    (alpha, beta, q) = (to_fraction(alpha), to_fraction(beta),
                        to_fraction(q))
    remainder = asc_Q(n1, alpha, beta, q) * asc_Q(n2, alpha, beta, q)
    coeffs = [0] * (n1 + n2 + 1)
    for degree in range(n1 + n2, -1, -1):
        c = normalize(to_fraction(remainder.coefficient(degree)) / 2**degree)
        if c:
            coeffs[degree] = c
            remainder = remainder - c * asc_Q(degree, alpha, beta, q)
    return coeffs


def asc_coefficient_from_laguerre(n1, n2, n3, alpha, q):
    """The Al-Salam-Chihara coefficient at ``beta = q/alpha`` obtained from
    the q-Laguerre expansion.

    With ``y = 1/alpha^2`` the affine change ``x = ((q-1)X + y + 1) alpha/2``
    turns ``Q_m`` into ``((q-1) alpha)^m L_m(X)``, so the coefficient is
    ``((q-1) alpha)^(n1+n2-n3)`` times the coefficient of ``L_{n3}`` in
    ``L_{n1} L_{n2}`` at ``(y, q)``.
    """
    (alpha, q) = (to_fraction(alpha), to_fraction(q))
    if alpha == 0:
        raise PoleAtSample("alpha = 0 has no y = 1/alpha^2")
    if n3 > n1 + n2:
        return 0
    c = laguerre_product_expansion(n1, n2)[n3]
    return normalize(((q - 1) * alpha)**(n1 + n2 - n3) *
                     c.eval_at(1 / alpha**2, q))


def classical_linearization_sum(n1, n2, n3):
    """``I(n1, n2, n3)`` at ``q = y = 1``:

    ``sum_s n1! n2! n3! 2^(N-2s) s! / ((s-n1)! (s-n2)! (s-n3)! (N-2s)!)``
    """
    total_size = n1 + n2 + n3
    fixed = _factorial(n1) * _factorial(n2) * _factorial(n3)
    total = 0
    for s in range(max(n1, n2, n3), total_size // 2 + 1):
        total += (fixed * 2**(total_size - 2 * s) * _factorial(s) //
                  (_factorial(s - n1) * _factorial(s - n2) *
                   _factorial(s - n3) * _factorial(total_size - 2 * s)))
    return total


def classical_linearization_coefficient(n1, n2, n3):
    """Coefficient of ``L_{n3}`` in ``L_{n1} L_{n2}`` for the monic classical
    Laguerre polynomials, from the classical sum divided by ``(n3!)^2``.
    """
    return normalize(to_fraction(classical_linearization_sum(n1, n2, n3)) /
                     _factorial(n3)**2)


def classical_product_expansion(n1, n2):
    """Coefficients of ``L_{n1} L_{n2}`` in the classical Laguerre basis."""
    remainder = classical_laguerre(n1) * classical_laguerre(n2)
    coeffs = [0] * (n1 + n2 + 1)
    for degree in range(n1 + n2, -1, -1):
        c = remainder.coefficient(degree)
        if c:
            coeffs[degree] = c
            remainder = remainder - c * classical_laguerre(degree)
    return coeffs


def _factorial(n):
    result = 1
    for j in range(2, n + 1):
        result *= j
    return result


def _blocks(sizes):
    return BlockSpec([s for s in sizes if s > 0])


def recurrence_case_split(n, rest=(), cap=DEFAULT_CAP):
    """Split ``D(1, n, rest)`` by the positions of ``sigma(1)`` and
    ``sigma^-1(1)`` relative to the second segment ``{2, ..., n+1}``.

    :returns: the weight polynomials of the four cases, in the order
        (both outside, only ``sigma(1)`` inside, only ``sigma^-1(1)`` inside,
        both inside).
    """
    if n < 1:
        raise ValueError("The second block must be non-empty, got %d" % n)
    b = BlockSpec((1, n) + tuple(rest))
    parts = [dict(), dict(), dict(), dict()]
    for (sigma, w, c) in class_rows(b, cap=cap):
        image_inside = sigma(1) <= n + 1
        preimage_inside = sigma.inverse()(1) <= n + 1
        case = 2 * preimage_inside + image_inside
        parts[case][(w, c)] = parts[case].get((w, c), 0) + 1
    return tuple(BiLaurent(p) for p in parts)


def recurrence_case_prediction(n, rest=(), cap=DEFAULT_CAP):
    """The four case polynomials predicted by the recurrence

    ``I(1, n, rest) = I(n+1, rest) + (yq + 1)[n]_q I(n, rest)
    + y[n]_q^2 I(n-1, rest)``.
    """
    rest = tuple(rest)
    same = class_polynomial(_blocks((n, ) + rest), cap=cap)
    return (class_polynomial(_blocks((n + 1, ) + rest), cap=cap),
            Q * Y * q_int(n) * same,
            q_int(n) * same,
            Y * q_int(n)**2 * class_polynomial(_blocks((n - 1, ) + rest),
                                               cap=cap))
