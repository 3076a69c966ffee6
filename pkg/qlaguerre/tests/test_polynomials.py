"""Tests for the q-Laguerre and Al-Salam-Chihara polynomial families.
"""
from fractions import Fraction

import pytest

from qlaguerre.errors import PoleAtSample, UnknownMethod
from qlaguerre.polynomials import ASCParams, asc_hypergeometric, asc_monic, \
    asc_norm, asc_Q, asc_rescaled, classical_laguerre, jacobi_for, \
    laguerre_jacobi, laguerre_poly
from qlaguerre.utils.bilaurent import ONE, Q, Y
from qlaguerre.utils.qcalc import q_pochhammer
from qlaguerre.utils.xpoly import XPoly


def test_laguerre_first_polynomials():
    assert laguerre_poly(0) == XPoly([ONE])
    assert laguerre_poly(1) == XPoly([-Y, ONE])
    assert laguerre_poly(2) == XPoly([Y**2 + Y**2 * Q, -(1 + 2 * Y + Y * Q),
                                      ONE])


@pytest.mark.parametrize("n", range(7))
def test_laguerre_explicit_matches_recurrence(n):
    assert laguerre_poly(n, "explicit") == laguerre_poly(n, "recurrence")


def test_laguerre_unknown_method():
    with pytest.raises(UnknownMethod):
        laguerre_poly(2, "tables")
    with pytest.raises(ValueError):
        laguerre_poly(-1)


def test_laguerre_jacobi():
    jc = laguerre_jacobi()
    assert jc.b(0) == Y
    assert jc.b(2) == Y * (1 + Q + Q**2) + 1 + Q
    assert jc.lam(2) == Y * (1 + Q)**2


def test_classical_laguerre():
    assert classical_laguerre(2) == XPoly([2, -4, 1])
    for n in range(8):
        assert classical_laguerre(n) == classical_laguerre(n, "recurrence")
        specialised = laguerre_poly(n).map_coefficients(
            lambda c: c.eval_at(1, 1))
        assert specialised == classical_laguerre(n)


def test_asc_recurrence_values():
    alpha, beta, q = 2, 3, Fraction(1, 2)
    assert asc_Q(0, alpha, beta, q) == XPoly([1])
    assert asc_Q(1, alpha, beta, q) == XPoly([-5, 2])
    assert asc_Q(2, alpha, beta, q) == XPoly([15, -15, 4])
    assert asc_monic(2, alpha, beta, q) == XPoly([Fraction(15, 4),
                                                  Fraction(-15, 4), 1])


@pytest.mark.parametrize("form", [1, 2, 3])
def test_asc_hypergeometric_forms(form):
    alpha, beta, q = Fraction(1, 2), Fraction(1, 3), Fraction(1, 5)
    u = Fraction(2, 7)
    x = (u + 1 / u) / 2
    for n in range(5):
        assert asc_hypergeometric(n, u, alpha, beta, q, form) == \
            asc_Q(n, alpha, beta, q)(x)


def test_asc_hypergeometric_errors():
    with pytest.raises(UnknownMethod):
        asc_hypergeometric(2, 2, 1, 1, Fraction(1, 2), form=4)
    with pytest.raises(PoleAtSample):
        asc_hypergeometric(2, 0, 1, 1, Fraction(1, 2))


def test_asc_norm():
    alpha, beta, q = Fraction(2, 3), Fraction(-5, 2), Fraction(3, 7)
    for n in range(6):
        assert asc_norm(n, alpha, beta, q) == \
            q_pochhammer(q, n, q) * q_pochhammer(alpha * beta, n, q)


def test_jacobi_for_laguerre_case():
    general = jacobi_for(ASCParams.laguerre())
    laguerre = laguerre_jacobi()
    for n in range(6):
        assert general.b(n) == laguerre.b(n)
        assert general.lam(n + 1) == laguerre.lam(n + 1)


def test_jacobi_for_rational_point():
    jc = jacobi_for(ASCParams(Fraction(1, 4), 2), 3)
    assert jc.b(0) == Fraction(1, 8)
    assert jc.lam(1) == Fraction(1, 4) * (1 - 3) * (1 - 2) / (1 - 3)**2
    with pytest.raises(PoleAtSample):
        jacobi_for(ASCParams(2, 3), 1)


def test_asc_rescaled_monic_is_jacobi_polynomial():
    params = ASCParams.from_alpha_beta(Fraction(2, 3), Fraction(5, 4))
    q = Fraction(-2, 5)
    jc = jacobi_for(params, q)
    for n in range(5):
        p = asc_rescaled(n, params, q)
        lead = p.leading()
        assert p.map_coefficients(lambda c: Fraction(c) / lead) == \
            jc.polynomial(n)


def test_asc_rescaled_coefficients_are_exact():
    points = [(Fraction(2, 3), Fraction(5, 4), Fraction(-2, 5)), (2, 3, 5)]
    for (alpha, beta, q) in points:
        params = ASCParams.from_alpha_beta(alpha, beta)
        for n in range(4):
            p = asc_rescaled(n, params, q)
            assert p.degree == n
            assert all(isinstance(c, (int, Fraction)) for c in p.coeffs)


def test_from_alpha_beta():
    params = ASCParams.from_alpha_beta(Fraction(1, 2), 3)
    assert params == ASCParams(4, Fraction(3, 2))
    with pytest.raises(PoleAtSample):
        ASCParams.from_alpha_beta(0, 1)


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
