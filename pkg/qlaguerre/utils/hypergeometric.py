"""Terminating basic hypergeometric series at rational points."""

import logging

from ..errors import NotInDomain, PoleAtSample
from .rational import normalize, to_fraction

logger = logging.getLogger(__name__)

MAX_TERMS = 1000


def phi(upper, lower, q, z, max_terms=MAX_TERMS):
    """Evaluate the basic hypergeometric series

    ``r_phi_s(a_1..a_r; b_1..b_s; q, z) = sum_k (a_1..a_r; q)_k /
    (q, b_1..b_s; q)_k * ((-1)^k q^(k(k-1)/2))^(1+s-r) * z^k``

    The series must terminate, i.e. some upper parameter must be of the form
    ``q^-n``; summation stops at the first vanishing numerator.

    :param upper: the r numerator parameters (rationals).
    :param lower: the s denominator parameters (rationals).
    :returns: an exact rational.
    :raises PoleAtSample: if a denominator Pochhammer vanishes first.
    :raises NotInDomain: if no numerator vanishes within ``max_terms`` terms.
    """
    upper = [to_fraction(a) for a in upper]
    lower = [to_fraction(b) for b in lower]
    q = to_fraction(q)
    z = to_fraction(z)
    extra = 1 + len(lower) - len(upper)

    total = to_fraction(0)
    term = to_fraction(1)
    for k in range(max_terms):
        total += term

        # Ratio of term k+1 to term k
        power = q**k
        numerator = z
        for a in upper:
            numerator *= 1 - a * power
        if numerator == 0:
            logger.debug("phi terminated after %d terms", k + 1)
            return normalize(total)

        denominator = 1 - q * power
        for b in lower:
            denominator *= 1 - b * power
        if denominator == 0:
            raise PoleAtSample("Denominator Pochhammer vanishes at k = %d" %
                               (k + 1))
        term = term * numerator / denominator * (-power)**extra

    raise NotInDomain("Series did not terminate within %d terms" % max_terms)
