"""The (wex, cr)-preserving bijections ``Phi_k`` and ``Gamma^(n1,n2)``.

``Phi_k`` rotates a permutation whose first ``k`` positions leave ``[1, k]``
and proves that ``I(n_1, ..., n_k)`` is invariant under cyclic shifts of the
blocks; ``Gamma^(n1,n2)`` swaps the first two blocks.  The crossing
decompositions used to show that crossings are preserved are exposed as
counters so that they can be checked exhaustively.
"""

import logging

from .errors import NotInDomain
from .permstats import Permutation, all_permutations

logger = logging.getLogger(__name__)


def _check_k(n, k):
    if not 1 <= k <= n:
        raise NotInDomain("Need 1 <= k <= n, got k=%d, n=%d" % (k, n))


def in_phi_domain(sigma, k):
    """``sigma(i) > k`` for ``1 <= i <= k``."""
    return all(sigma(i) > k for i in range(1, k + 1))


def in_phi_codomain(sigma, k):
    """``sigma(i) <= n - k`` for ``n - k < i <= n``."""
    n = sigma.n
    return all(sigma(i) <= n - k for i in range(n - k + 1, n + 1))


def _require(test, sigma, what):
    if not test:
        raise NotInDomain("%s is not in %s" % (sigma, what))


def _rotate(sigma, shift):
    # Conjugation by j -> j - shift (mod n) on 1..n
    n = sigma.n

    def r(j):
        return (j - shift - 1) % n + 1

    def r_inverse(j):
        return (j + shift - 1) % n + 1

    return Permutation(r(sigma(r_inverse(i))) for i in range(1, n + 1))


def phi(sigma, k):
    """``Phi_k``: ``sigma'(i) = sigma(i+k) - k`` when ``sigma(i+k) > k``,
    ``sigma(i+k) + n - k`` otherwise (for ``i <= n - k``), and
    ``sigma(i+k-n) - k`` for ``i > n - k``.

    :raises NotInDomain: unless ``sigma(i) > k`` for every ``i <= k``.
    """
    _check_k(sigma.n, k)
    _require(in_phi_domain(sigma, k), sigma, "the domain of Phi_%d" % k)
    return _rotate(sigma, k)


def phi_inverse(sigma, k):
    """Inverse of :py:func:`phi`.

    :raises NotInDomain: unless ``sigma(i) <= n - k`` for every ``i > n - k``.
    """
    _check_k(sigma.n, k)
    _require(in_phi_codomain(sigma, k), sigma, "the image of Phi_%d" % k)
    return _rotate(sigma, -k)


def _check_blocks(sigma, n1, n2):
    if n1 < 1 or n2 < 1 or n1 + n2 > sigma.n:
        raise NotInDomain("Need n1, n2 >= 1 and n1 + n2 <= %d, got (%d, %d)"
                          % (sigma.n, n1, n2))


def in_gamma_domain(sigma, n1, n2):
    """No arc of ``sigma`` joins two points of ``[1, n1]`` or two points of
    ``[n1+1, n1+n2]``.
    """
    top = n1 + n2
    for (i, v) in enumerate(sigma.image, 1):
        if i <= n1 and v <= n1:
            return False
        if n1 < i <= top and n1 < v <= top:
            return False
    return True


def gamma(sigma, n1, n2):
    """``Gamma^(n1,n2)`` from ``S_n^(n1,n2)`` to ``S_n^(n2,n1)``.

    With ``N = n1 + n2``:

    1. arcs with both ends above ``N`` are kept;
    2. an upper arc ``i -> N+1-j`` inside ``[1, N]`` becomes ``j -> N+1-i``,
       and a lower arc ``N+1-l -> k`` inside ``[1, N]`` becomes
       ``N+1-k -> l``;
    3. the arcs leaving ``[1, N]`` from ``C`` and entering it at ``D`` are
       re-attached, in order, to the positions ``E`` and values ``F`` of
       ``[1, N]`` not used by step 2.

    :raises NotInDomain: if ``sigma`` has an arc inside one of the first two
        blocks.
    """
    _check_blocks(sigma, n1, n2)
    _require(in_gamma_domain(sigma, n1, n2), sigma,
             "S_%d^(%d,%d)" % (sigma.n, n1, n2))
    n = sigma.n
    top = n1 + n2
    inverse = sigma.inverse()
    image = [0] * (n + 1)

    # Step 1
    for i in range(top + 1, n + 1):
        if sigma(i) > top:
            image[i] = sigma(i)

    # Step 2
    moved_from = set()
    moved_to = set()
    for i in range(1, top + 1):
        v = sigma(i)
        if i < v <= top:
            j = top + 1 - v
            (image[j], source) = (top + 1 - i, j)
        elif v < i <= top:
            (k, ell) = (v, top + 1 - i)
            (image[top + 1 - k], source) = (ell, top + 1 - k)
        else:
            continue
        moved_from.add(source)
        moved_to.add(image[source])

    # Step 3
    leaving = [i for i in range(1, top + 1) if sigma(i) > top]
    entering = [i for i in range(1, top + 1) if inverse(i) > top]
    sources = sorted(inverse(d) for d in entering)
    free_positions = [e for e in range(1, top + 1) if e not in moved_from]
    free_values = [f for f in range(1, top + 1) if f not in moved_to]
    for (e, c) in zip(free_positions, leaving):
        image[e] = sigma(c)
    for (index, d) in enumerate(entering):
        matched = sources.index(inverse(d))
        image[sources[index]] = free_values[matched]

    return Permutation(image[1:])


def _pairs(n):
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                yield (i, j)


def crossing_decomposition_L(sigma, k):
    """``(|L1|, |L2|, |L3|, |L4|)`` for ``sigma`` in the domain of ``Phi_k``.

    ``L1``-``L3`` partition the crossings of ``sigma`` by the position of the
    two arcs relative to ``k``; ``L4`` has the same size as ``L3``.

    :raises NotInDomain: outside the domain of ``Phi_k``.
    """
    _check_k(sigma.n, k)
    _require(in_phi_domain(sigma, k), sigma, "the domain of Phi_%d" % k)
    s = sigma
    counts = [0, 0, 0, 0]
    for (i, j) in _pairs(sigma.n):
        if k < i < j <= s(i) < s(j) or i > j > s(i) > s(j) > k:
            counts[0] += 1
        if i < j <= k < s(i) < s(j) or i > j > k >= s(i) > s(j):
            counts[1] += 1
        if i <= k < j <= s(i) < s(j) or i > j > s(i) > k >= s(j):
            counts[2] += 1
        if s(i) <= k < j < i <= s(j) or i <= k < s(j) < s(i) < j:
            counts[3] += 1
    return tuple(counts)


def crossing_decomposition_R(sigma, k):
    """``(|R1|, |R2|, |R3|)`` for ``sigma`` in the image of ``Phi_k``; with
    ``m = n - k`` these split the crossings by their position relative to
    ``m``, and ``|R_i(Phi_k(s))| = |L_i(s)|``.
    """
    _check_k(sigma.n, k)
    _require(in_phi_codomain(sigma, k), sigma, "the image of Phi_%d" % k)
    s = sigma
    m = sigma.n - k
    counts = [0, 0, 0]
    for (i, j) in _pairs(sigma.n):
        if i < j <= s(i) < s(j) <= m or m >= i > j > s(i) > s(j):
            counts[0] += 1
        if i < j <= m < s(i) < s(j) or i > j > m >= s(i) > s(j):
            counts[1] += 1
        if i < j <= s(i) <= m < s(j) or i > m >= j > s(i) > s(j):
            counts[2] += 1
    return tuple(counts)


def crossing_decomposition_G(sigma, n1, n2):
    """``(|G1|, ..., |G5|)``, the crossings of ``sigma`` split by their
    position relative to ``N = n1 + n2``.

    :raises NotInDomain: outside ``S_n^(n1,n2)``.
    """
    _check_blocks(sigma, n1, n2)
    _require(in_gamma_domain(sigma, n1, n2), sigma,
             "S_%d^(%d,%d)" % (sigma.n, n1, n2))
    s = sigma
    top = n1 + n2
    counts = [0, 0, 0, 0, 0]
    for (i, j) in _pairs(sigma.n):
        if top < i < j <= s(i) < s(j) or i > j > s(i) > s(j) > top:
            counts[0] += 1
        if i < j < s(i) < s(j) <= top or top >= i > j > s(i) > s(j):
            counts[1] += 1
        if i < j <= top < s(i) < s(j) or i > j > top >= s(i) > s(j):
            counts[2] += 1
        if i <= top < j <= s(i) < s(j) or i > j > s(i) > top >= s(j):
            counts[3] += 1
        if i < j <= s(i) <= top < s(j) or i > top >= j > s(i) > s(j):
            counts[4] += 1
    return tuple(counts)


def g5_closed(sigma, n1, n2):
    """``|G5| = sum_r (j_r - i_r) + sum_r (l_r - k_r - 1) - C(p+q, 2)`` over
    the upper arcs ``(i_r, j_r)`` and the reversed lower arcs ``(k_r, l_r)``
    lying inside ``[1, n1+n2]``.
    """
    _check_blocks(sigma, n1, n2)
    _require(in_gamma_domain(sigma, n1, n2), sigma,
             "S_%d^(%d,%d)" % (sigma.n, n1, n2))
    top = n1 + n2
    (total, arcs) = (0, 0)
    for i in range(1, top + 1):
        v = sigma(i)
        if i < v <= top:
            total += v - i
            arcs += 1
        elif v < i <= top:
            total += i - v - 1
            arcs += 1
    return total - arcs * (arcs - 1) // 2


def a_counts(sigma, i):
    """``(#{j : j <= i < sigma(j)}, #{j : j > i >= sigma(j)},
    #{j : j <= i < sigma^-1(j)})``; all three agree.
    """
    inverse = sigma.inverse()
    positions = range(1, sigma.n + 1)
    return (sum(1 for j in positions if j <= i < sigma(j)),
            sum(1 for j in positions if j > i >= sigma(j)),
            sum(1 for j in positions if j <= i < inverse(j)))


def phi_domain(n, k):
    """Every permutation of ``[n]`` in the domain of ``Phi_k``."""
    return (s for s in all_permutations(n) if in_phi_domain(s, k))


def gamma_domain(n, n1, n2):
    """Every permutation in ``S_n^(n1,n2)``."""
    return (s for s in all_permutations(n) if in_gamma_domain(s, n1, n2))


def decomposition_rows(sigma, k=None, n1=None, n2=None):
    """CSV rows, header first: ``sigma,L1,L2,L3,L4`` when ``k`` is given,
    ``sigma,G1,...,G5`` for ``(n1, n2)``.
    """
    if k is not None:
        counts = crossing_decomposition_L(sigma, k)
        header = ("sigma", "L1", "L2", "L3", "L4")
    else:
        counts = crossing_decomposition_G(sigma, n1, n2)
        header = ("sigma", "G1", "G2", "G3", "G4", "G5")
    return [header, (str(sigma), ) + counts]
