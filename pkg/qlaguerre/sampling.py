"""Seeded rational sample points for checking rational-function identities.
"""

import logging
from fractions import Fraction

import numpy as np

from .errors import PoleAtSample

logger = logging.getLogger(__name__)

DEFAULT_SEED = 42
DEFAULT_HEIGHT = 7
DEFAULT_MAX_RESAMPLES = 100
DEFAULT_EXCLUDE = (0, 1, -1)


class RationalSampler(object):
    """Draw rationals ``p/r`` with ``|p| <= height`` and ``1 <= r <= height``
    from a ``numpy.random.RandomState``.

    Two samplers with the same seed produce the same sequence of points.
    """
    def __init__(self, seed=DEFAULT_SEED, height=DEFAULT_HEIGHT,
                 max_resamples=DEFAULT_MAX_RESAMPLES):
        if height < 2:
            raise ValueError("Height must be at least 2, got %d" % height)
        self.seed = seed
        self.height = height
        self.max_resamples = max_resamples
        self.rng = np.random.RandomState(seed)

    def rational(self, exclude=DEFAULT_EXCLUDE):
        """Always a Fraction, whole numbers included."""
        while True:
            p = int(self.rng.randint(-self.height, self.height + 1))
            r = int(self.rng.randint(1, self.height + 1))
            value = Fraction(p, r)
            if value not in exclude:
                return value

    def point(self, names, exclude=DEFAULT_EXCLUDE):
        """A dict assigning a fresh rational to each name."""
        return dict((name, self.rational(exclude)) for name in names)

    def evaluate(self, func, names, exclude=DEFAULT_EXCLUDE):
        """Call ``func(**point)`` at fresh points until it returns.

        Any ``ZeroDivisionError`` (poles, including :py:class:`PoleAtSample`)
        triggers a resample.

        :returns: ``(point, value)``.
        :raises PoleAtSample: after ``max_resamples`` failed attempts.
        """
        for _ in range(self.max_resamples + 1):
            point = self.point(names, exclude)
            try:
                return point, func(**point)
            except ZeroDivisionError as err:
                logger.debug("Pole at %s (%s), resampling", point, err)
        raise PoleAtSample("No pole-free point for %s after %d resamples" %
                           (getattr(func, '__name__', func),
                            self.max_resamples))

    def points(self, func, names, count, exclude=DEFAULT_EXCLUDE):
        """``count`` successive results of :py:meth:`evaluate`."""
        return [self.evaluate(func, names, exclude) for _ in range(count)]
