"""Tests for the seeded rational sampler.
"""
from fractions import Fraction

import pytest

from qlaguerre.errors import PoleAtSample
from qlaguerre.sampling import RationalSampler


def test_same_seed_same_points():
    a = RationalSampler(seed=7)
    b = RationalSampler(seed=7)
    assert [a.rational() for _ in range(20)] == \
        [b.rational() for _ in range(20)]
    assert a.point(("y", "q")) == b.point(("y", "q"))


def test_rationals_are_exact_and_bounded():
    sampler = RationalSampler(seed=3, height=5)
    for _ in range(200):
        value = sampler.rational()
        assert type(value) is Fraction
        assert value not in (0, 1, -1)
        assert abs(Fraction(value).numerator) <= 5
        assert Fraction(value).denominator <= 5


def test_height_must_allow_points():
    with pytest.raises(ValueError):
        RationalSampler(height=1)


def test_evaluate_resamples_on_poles():
    calls = []

    def func(y):
        calls.append(y)
        if len(calls) < 3:
            raise ZeroDivisionError("pole")
        return 2 * y

    (point, value) = RationalSampler(seed=1).evaluate(func, ("y", ))
    assert len(calls) == 3
    assert point == {"y": calls[-1]}
    assert value == 2 * calls[-1]


def test_evaluate_gives_up():
    def func(y, q):
        raise PoleAtSample("always")

    with pytest.raises(PoleAtSample):
        RationalSampler(seed=1, max_resamples=4).evaluate(func, ("y", "q"))


def test_points():
    results = RationalSampler(seed=5).points(lambda a: a * a, ("a", ), 4)
    assert len(results) == 4
    assert all(value == point["a"]**2 for (point, value) in results)


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
