"""Tests for sparse y/q Laurent polynomials.
"""

import json
import random
from fractions import Fraction

import pytest

from qlaguerre.errors import DivisionByZero, NotDivisible, PoleAtZero
from qlaguerre.utils.bilaurent import EXPONENT_LIMIT, ONE, Q, Y, ZERO, \
    BiLaurent, exact_div


def random_bilaurent(rng, n_terms=4, max_y=3, q_range=(-2, 3)):
    return BiLaurent(dict(
        ((rng.randint(0, max_y), rng.randint(*q_range)),
         Fraction(rng.randint(-5, 5), rng.randint(1, 3)))
        for _ in range(n_terms)))


def test_ring_examples():
    assert (1 + Q) * (1 - Q) == 1 - Q**2
    assert (Y * Q**-1) * Q == Y
    assert (Y - Y) == ZERO
    assert not (Y - Y)
    assert 2 * Y + Y == 3 * Y
    assert -Y + 1 == 1 - Y


def test_no_zero_terms_stored():
    p = BiLaurent({(1, 0): 0, (0, 0): 2})
    assert len(p) == 1
    assert (Y + Q - Y).terms == (((0, 1), 1), )


def test_negative_y_exponent_rejected():
    with pytest.raises(ValueError):
        BiLaurent({(-1, 0): 1})


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        BiLaurent({(0, 0): 0.5})
    with pytest.raises(TypeError):
        Y * 0.5


def test_ring_axioms_random():
    rng = random.Random(7)
    for _ in range(30):
        (a, b, c) = [random_bilaurent(rng) for _ in range(3)]
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_exact_div_examples():
    assert exact_div(1 - Q**2, 1 - Q) == 1 + Q
    assert ((1 + Q) * Y**2) / Y == (1 + Q) * Y
    assert (Y * Q**-3) / Q**-1 == Y * Q**-2
    assert (6 * Y) / 4 == Fraction(3, 2) * Y


def test_exact_div_not_divisible():
    with pytest.raises(NotDivisible):
        exact_div(1 - Q**3, 1 - Q**2)
    with pytest.raises(NotDivisible):
        Q / Y
    with pytest.raises(NotDivisible):
        ONE / (1 - Q)


def test_exact_div_by_zero():
    with pytest.raises(DivisionByZero):
        Y / ZERO
    with pytest.raises(ZeroDivisionError):
        Y / 0


def test_exact_div_inverts_multiplication():
    rng = random.Random(11)
    for _ in range(30):
        a = random_bilaurent(rng)
        b = random_bilaurent(rng)
        if b.is_zero():
            continue
        assert exact_div(a * b, b) == a


def test_eval_at():
    assert (Y + Y**2).eval_at(y=2, q=5) == 6
    assert (Q**-1).eval_at(y=0, q=Fraction(1, 3)) == 3
    mu3 = Y + (3 + Q) * Y**2 + Y**3
    assert mu3.eval_at(y=1, q=1) == 6


def test_eval_pole_at_zero():
    with pytest.raises(PoleAtZero):
        (Y * Q**-1).eval_at(y=1, q=0)
    assert (Y * Q).eval_at(y=1, q=0) == 0


def test_eval_is_homomorphism():
    rng = random.Random(3)
    for _ in range(20):
        a = random_bilaurent(rng)
        b = random_bilaurent(rng)
        point = dict(y=Fraction(rng.randint(-4, 4), rng.randint(1, 4)),
                     q=Fraction(rng.randint(1, 5), rng.randint(1, 4)))
        assert (a * b).eval_at(**point) == a.eval_at(**point) * \
            b.eval_at(**point)
        assert (a + b).eval_at(**point) == a.eval_at(**point) + \
            b.eval_at(**point)


def test_partial_substitution():
    p = Y * (1 + Q) + Y**2 * Q**-1
    assert p.substitute(q=1) == 2 * Y + Y**2
    assert p.substitute(y=2) == 2 + 2 * Q + 4 * Q**-1


def test_canonical_text():
    mu3 = Y + (3 + Q) * Y**2 + Y**3
    assert str(mu3) == "1*y + 3*y^2 + 1*y^2*q + 1*y^3"
    assert str(ZERO) == "0"
    assert str(-Y + Fraction(1, 2) * Q**-2) == "1/2*q^-2 - 1*y"
    assert str(-Y) == "-1*y"
    assert Y.to_text(names=('a', 'q')) == "1*a"


def test_parse_text():
    for p in [Y + (3 + Q) * Y**2 + Y**3, ZERO, -Y + Fraction(1, 2) * Q**-2,
              Fraction(-7, 3) * Y**4 * Q**5]:
        assert BiLaurent.parse(str(p)) == p


def test_json_form():
    p = Y - Fraction(2, 3) * Y**2 * Q**-1
    data = p.to_json_dict()
    assert data == {"terms": [{"y": 1, "q": 0, "coeff": "1"},
                              {"y": 2, "q": -1, "coeff": "-2/3"}]}
    assert BiLaurent.from_json_dict(json.loads(json.dumps(data))) == p


def test_equality_with_scalars_and_hash():
    assert BiLaurent.constant(3) == 3
    assert hash(BiLaurent.constant(3)) == hash(3)
    assert Y != 1
    assert len(set([Y, Y * 1, Q])) == 2


def test_negative_power_only_for_units():
    assert (2 * Q**3)**-1 == Fraction(1, 2) * Q**-3
    with pytest.raises(NotDivisible):
        (1 + Q)**-1


def test_exponent_range_checked_by_arithmetic():
    top = BiLaurent({(0, EXPONENT_LIMIT): 1})
    bottom = BiLaurent({(0, -EXPONENT_LIMIT): 1})
    with pytest.raises(OverflowError):
        top * Q
    with pytest.raises(OverflowError):
        bottom * (1 + Q**-1)
    with pytest.raises(OverflowError):
        BiLaurent({(EXPONENT_LIMIT, 0): 1}) * Y
    with pytest.raises(OverflowError):
        BiLaurent({(0, 2**30): 1})**2
    with pytest.raises(OverflowError):
        exact_div(top, Q**-1)
    assert (top * Q**-1) * Q == top


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
