"""Permutations, the (wex, cr) statistics and generalized derangements.

Permutations use 1-indexed semantics throughout: ``sigma(i)`` for
``1 <= i <= n``.  The generating polynomials are BiLaurent values in which
the exponent of y counts weak excedances and the exponent of q counts
crossings.
"""

import collections
import logging
from concurrent import futures

from bitarray import bitarray

from .errors import CapExceeded, SizeMismatch
from .utils.bilaurent import BiLaurent

logger = logging.getLogger(__name__)

DEFAULT_CAP = 10


class Permutation(object):
    """A bijection of ``{1, ..., n}`` stored as its image sequence."""
    __slots__ = ('image', '_inverse')

    def __init__(self, image):
        image = tuple(int(v) for v in image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError("%r is not a permutation of 1..%d" %
                             (image, len(image)))
        self.image = image
        self._inverse = None

    @classmethod
    def parse(cls, text):
        """Read the comma-separated image format, e.g. ``5,4,1,2,3``."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(int(v) for v in text.split(','))
        except ValueError:
            raise ValueError("'%s' is not a comma-separated permutation" %
                             text)

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @property
    def n(self):
        return len(self.image)

    def __call__(self, i):
        return self.image[i - 1]

    def inverse(self):
        if self._inverse is None:
            inverse = [0] * self.n
            for (i, v) in enumerate(self.image):
                inverse[v - 1] = i + 1
            self._inverse = Permutation(inverse)
        return self._inverse

    def __len__(self):
        return len(self.image)

    def __iter__(self):
        return iter(self.image)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.image == other.image

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self.image < other.image

    def __hash__(self):
        return hash(self.image)

    def __str__(self):
        return ",".join(str(v) for v in self.image)

    def __repr__(self):
        return "Permutation(%s)" % (self.image, )


class BlockSpec(object):
    """A composition ``(n_1, ..., n_k)`` cutting ``[n]`` into consecutive
    segments.

    :attr segment: tuple mapping each position ``1..n`` (index 0 unused) to
        the index of its segment.
    """
    __slots__ = ('sizes', 'segment')

    def __init__(self, sizes):
        sizes = tuple(int(s) for s in sizes)
        if any(s < 1 for s in sizes):
            raise ValueError("Block sizes must be positive, got %r" %
                             (sizes, ))
        self.sizes = sizes

        segment = [None]
        for (index, size) in enumerate(sizes):
            segment.extend([index] * size)
        self.segment = tuple(segment)

    @classmethod
    def parse(cls, text):
        return cls(int(v) for v in text.split(','))

    @property
    def n(self):
        return sum(self.sizes)

    @property
    def n2(self):
        """``N_2 = n_1 + n_2``."""
        return sum(self.sizes[:2])

    @property
    def boundaries(self):
        """Inclusive ``(first, last)`` position of every segment."""
        bounds = []
        start = 1
        for size in self.sizes:
            bounds.append((start, start + size - 1))
            start += size
        return bounds

    def __len__(self):
        return len(self.sizes)

    def __iter__(self):
        return iter(self.sizes)

    def __eq__(self, other):
        if not isinstance(other, BlockSpec):
            return NotImplemented
        return self.sizes == other.sizes

    def __hash__(self):
        return hash(self.sizes)

    def __str__(self):
        return ",".join(str(s) for s in self.sizes)

    def __repr__(self):
        return "BlockSpec(%s)" % (self.sizes, )


def _as_blocks(b):
    return b if isinstance(b, BlockSpec) else BlockSpec(b)


def wex(sigma):
    """Number of weak excedances, ``#{i : i <= sigma(i)}``."""
    return sum(1 for (i, v) in enumerate(sigma.image, 1) if i <= v)


def cr(sigma):
    """Number of crossings.

    Counts ``j < i <= sigma(j) < sigma(i)`` (upper arcs, touching allowed)
    plus ``j > i > sigma(j) > sigma(i)`` (lower arcs, strict).
    """
    s = (None, ) + sigma.image
    n = sigma.n
    count = 0
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if j < i <= s[j] < s[i]:
                count += 1
            elif j > i > s[j] > s[i]:
                count += 1
    return count


def is_generalized_derangement(sigma, b):
    """True iff no ``i`` is mapped into its own segment.

    :raises SizeMismatch: if the block sizes do not add up to ``n``.
    """
    b = _as_blocks(b)
    if b.n != sigma.n:
        raise SizeMismatch("Blocks %s cover %d points, permutation has %d" %
                           (b, b.n, sigma.n))
    segment = b.segment
    return all(segment[i] != segment[v]
               for (i, v) in enumerate(sigma.image, 1))


def _check_cap(n, cap):
    if n > cap:
        raise CapExceeded("Enumeration of size %d exceeds the cap of %d" %
                          (n, cap))


def _search(n, segment=None, first_images=None):
    """Yield ``(image, wex, cr)`` for every permutation of ``[n]`` sending no
    position into its own segment, in lexicographic order of images.

    Statistics are accumulated while the images are assigned left to right.
    When ``first_images`` is given only permutations with ``sigma(1)`` in it
    are produced.
    """
    if n == 0:
        yield (), 0, 0
        return

    image = [0] * (n + 1)
    used = bitarray(n + 1)
    used.setall(False)
    first = None
    if first_images is not None:
        first = bitarray(n + 1)
        first.setall(False)
        for v in first_images:
            first[v] = True

    wex_before = [0] * (n + 2)
    cr_before = [0] * (n + 2)
    candidate = [1] * (n + 2)
    p = 1
    while p >= 1:
        v = candidate[p]
        while v <= n and (used[v] or
                          (segment is not None and
                           segment[v] == segment[p]) or
                          (p == 1 and first is not None and not first[v])):
            v += 1

        if v > n:
            # Exhausted this position, step back
            p -= 1
            if p >= 1:
                used[image[p]] = False
                candidate[p] = image[p] + 1
            continue

        image[p] = v
        w = wex_before[p] + (1 if p <= v else 0)
        c = cr_before[p]
        for j in range(1, p):
            s = image[j]
            if p <= s < v or s < v < j:
                c += 1

        if p == n:
            yield tuple(image[1:]), w, c
            candidate[p] = v + 1
        else:
            used[v] = True
            wex_before[p + 1] = w
            cr_before[p + 1] = c
            p += 1
            candidate[p] = 1


def enumerate_class(b, cap=DEFAULT_CAP, first_images=None):
    """Stream the members of ``D(n_1, ..., n_k)`` in lexicographic order.

    :param b: a BlockSpec or a sequence of block sizes.
    :param first_images: optional collection restricting ``sigma(1)``; used to
        partition the class between workers.
    :raises CapExceeded: if ``n`` exceeds ``cap``.
    """
    b = _as_blocks(b)
    _check_cap(b.n, cap)
    for (image, _, _) in _search(b.n, b.segment, first_images):
        yield Permutation(image)


def class_rows(b, cap=DEFAULT_CAP):
    """Yield ``(sigma, wex, cr)`` for every member of the class."""
    b = _as_blocks(b)
    _check_cap(b.n, cap)
    for (image, w, c) in _search(b.n, b.segment):
        yield (Permutation(image), w, c)


def _tally(args):
    (n, segment, first_images) = args
    return collections.Counter((w, c) for (_, w, c) in
                               _search(n, segment, first_images))


def _partition(n, workers):
    """Deterministically split the first-image values between workers."""
    groups = [list(range(start, n + 1, workers))
              for start in range(1, workers + 1)]
    return [g for g in groups if g]


def _polynomial(n, segment, workers):
    if workers <= 1 or n < 2:
        counts = _tally((n, segment, None))
    else:
        jobs = [(n, segment, group) for group in _partition(n, workers)]
        counts = collections.Counter()
        with futures.ProcessPoolExecutor(max_workers=workers) as pool:
            for partial in pool.map(_tally, jobs):
                counts.update(partial)
    return BiLaurent(dict(counts))


def class_polynomial(b, cap=DEFAULT_CAP, workers=1):
    """``sum(y^wex(sigma) q^cr(sigma))`` over ``D(n_1, ..., n_k)``.

    :param b: a BlockSpec or a sequence of block sizes.
    :param workers: number of processes to split the enumeration over; the
        result does not depend on it.
    :raises CapExceeded: if ``n`` exceeds ``cap``.
    """
    b = _as_blocks(b)
    _check_cap(b.n, cap)
    logger.debug("Enumerating D(%s)", b)
    return _polynomial(b.n, b.segment, workers)


def permutation_polynomial(n, cap=DEFAULT_CAP, workers=1):
    """``sum(y^wex(sigma) q^cr(sigma))`` over all of ``S_n``; 1 for n = 0."""
    if n < 0:
        raise ValueError("n must be non-negative, got %d" % n)
    _check_cap(n, cap)
    logger.debug("Enumerating S_%d", n)
    return _polynomial(n, None, workers)


def all_permutations(n):
    """All of ``S_n`` in lexicographic order."""
    for (image, _, _) in _search(n):
        yield Permutation(image)


def format_class_csv_rows(b, cap=DEFAULT_CAP):
    """Rows of the ``sigma,wex,cr`` listing, header first."""
    yield ("sigma", "wex", "cr")
    for (sigma, w, c) in class_rows(b, cap):
        yield (str(sigma), w, c)


def compositions(total):
    """All compositions of ``total`` into positive parts, in lexicographic
    order; ``()`` for zero.
    """
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first, ) + rest
