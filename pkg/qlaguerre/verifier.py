"""Verification suites cross-checking every route to the same quantity.

Checks are plain functions ``check(verifier)`` yielding
:py:class:`CheckResult` objects; they are registered against a suite name
with :py:meth:`Verifier.register_check` at the bottom of this module.
"""

import collections
import csv
import itertools
import logging
import os
from concurrent import futures
from fractions import Fraction

from . import bijections, linearization, moments, stirling
from .errors import QLaguerreError
from .permstats import DEFAULT_CAP, BlockSpec, Permutation, \
    all_permutations, class_polynomial, compositions, cr, enumerate_class, \
    permutation_polynomial, wex
from .polynomials import ASCParams, asc_hypergeometric, asc_norm, asc_Q, \
    asc_rescaled, classical_laguerre, jacobi_for, laguerre_jacobi, \
    laguerre_poly
from .sampling import DEFAULT_MAX_RESAMPLES, DEFAULT_SEED, RationalSampler
from .utils.bilaurent import BiLaurent, Q, Y
from .utils.qcalc import q_factorial, q_pochhammer
from .utils.rational import format_rational, normalize
from .utils.xpoly import XPoly

logger = logging.getLogger(__name__)

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")


class CheckResult(object):
    """Outcome of one named check.

    An ``observation`` reports a pattern that is not a proven identity; it
    is shown as OBSERVED or NOT-HELD and never counts as a failure.
    """
    __slots__ = ('name', 'detail', 'passed', 'lhs', 'rhs', 'observation')

    def __init__(self, name, detail, passed, lhs=None, rhs=None,
                 observation=False):
        self.name = name
        self.detail = detail
        self.passed = bool(passed)
        self.lhs = lhs
        self.rhs = rhs
        self.observation = observation

    @property
    def status(self):
        if self.observation:
            return "OBSERVED" if self.passed else "NOT-HELD"
        return "PASS" if self.passed else "FAIL"

    @property
    def failed(self):
        return not (self.passed or self.observation)

    def sort_key(self):
        return (self.name, self.detail)

    def __repr__(self):
        return "CheckResult(%s %s %s)" % (self.name, self.detail, self.status)


def compare(name, detail, lhs, rhs, observation=False):
    return CheckResult(name, detail, lhs == rhs, str(lhs), str(rhs),
                       observation)


class Verifier(object):
    """Run registered checks with a fixed configuration.

    :param max_n: overrides the default size of every suite.
    :param seed: seed of the rational sample points; every check draws from
        a fresh generator with this seed, so results do not depend on the
        order in which checks run.
    """
    suites = collections.OrderedDict()  # Suite name -> list of checks

    @classmethod
    def register_check(cls, func, suite):
        cls.suites.setdefault(suite, list()).append(func)

    def __init__(self, max_n=None, seed=DEFAULT_SEED, samples=20,
                 cap=DEFAULT_CAP, max_resamples=DEFAULT_MAX_RESAMPLES,
                 workers=1):
        self.max_n = max_n
        self.seed = seed
        self.samples = samples
        self.cap = cap
        self.max_resamples = max_resamples
        self.workers = workers

    @classmethod
    def from_config(cls, config, max_n=None):
        return cls(max_n=max_n, seed=config.seed, samples=config.samples,
                   cap=config.cap, max_resamples=config.max_resamples,
                   workers=config.workers)

    def size(self, default):
        """The size a check should run to."""
        return default if self.max_n is None else self.max_n

    def sampler(self):
        return RationalSampler(self.seed, max_resamples=self.max_resamples)

    def checks(self, suite="all"):
        if suite == "all":
            return list(itertools.chain(*self.suites.values()))
        if suite not in self.suites:
            raise ValueError("Unknown suite '%s'" % suite)
        return list(self.suites[suite])

    def _run_check(self, check):
        logger.debug("Running %s", check.__name__)
        try:
            return list(check(self))
        except QLaguerreError as err:
            logger.warning("%s raised %s", check.__name__, err)
            return [CheckResult(check.__name__, "error: %s" % err, False)]

    def run(self, suite="all"):
        """All results of a suite, sorted by check name and detail."""
        checks = self.checks(suite)
        if self.workers > 1:
            with futures.ThreadPoolExecutor(max_workers=self.workers) as pool:
                batches = list(pool.map(self._run_check, checks))
        else:
            batches = [self._run_check(c) for c in checks]

        results = sorted(itertools.chain(*batches),
                         key=CheckResult.sort_key)
        failed = [r for r in results if r.failed]
        for r in results:
            if r.failed:
                logger.warning("FAIL %s %s: %s != %s", r.name, r.detail,
                               r.lhs, r.rhs)
            elif r.observation and not r.passed:
                logger.info("NOT-HELD %s %s", r.name, r.detail)
        logger.info("Suite '%s': %d checks, %d failed", suite, len(results),
                    len(failed))
        return results


def read_golden(name):
    """Rows of a golden file as dicts with keys case, lhs, rhs, equal."""
    with open(os.path.join(GOLDEN_DIR, name)) as f:
        return list(csv.DictReader(f))


def _blocks_text(sizes):
    return ",".join(str(s) for s in sizes)


def _point_text(point):
    return " ".join("%s=%s" % (k, format_rational(point[k]))
                    for k in sorted(point))


def _golden(name, compute):
    for row in read_golden(name):
        expected = row["equal"].strip().lower() == "true"
        value = compute(row["case"], row["lhs"])
        passed = (value == row["rhs"]) == expected
        yield CheckResult("golden-%s" % name.split('.')[0],
                          "%s(%s)" % (row["case"], row["lhs"]), passed,
                          value, row["rhs"])


# Moments
def check_moment_routes(v):
    """Enumeration, Motzkin paths, closed form and generating function."""
    n_max = v.size(8)
    jc = laguerre_jacobi()
    motzkin = moments.motzkin_moments(n_max, jc)
    series = moments.moment_gf_truncated("laguerre", n_max)
    for n in range(n_max + 1):
        values = [motzkin[n], series.coefficient(n)]
        if n <= v.cap:
            values.append(permutation_polynomial(n, cap=v.cap))
        if n >= 1:
            values.append(moments.moment_closed_laguerre(n))
        yield CheckResult("moments-four-routes", "n=%d" % n,
                          all(x == values[0] for x in values),
                          str(values[0]), " | ".join(str(x) for x in values))


def check_moment_enumeration_to_cap(v):
    if v.max_n is not None:
        return
    table = moments.moment_table("laguerre")
    for n in range(9, v.cap + 1):
        yield compare("moments-enumeration", "n=%d" % n,
                      permutation_polynomial(n, cap=v.cap), table[n])


def check_orthogonality(v):
    top = min(v.size(5), 5)
    table = moments.moment_table("laguerre")
    for n1 in range(top + 1):
        for n2 in range(top + 1):
            value = moments.functional_apply(
                laguerre_poly(n1) * laguerre_poly(n2), table)
            expected = (Y**n1 * q_factorial(n1)**2 if n1 == n2
                        else BiLaurent())
            yield compare("thm-orthogonality", "n1=%d n2=%d" % (n1, n2),
                          value, expected)


def check_laguerre_explicit(v):
    for n in range(v.size(8) + 1):
        yield compare("laguerre-explicit", "n=%d" % n,
                      laguerre_poly(n, method="explicit"),
                      laguerre_poly(n))


def check_derangements(v):
    for n in range(min(v.size(8), v.cap) + 1):
        yield compare("lemma-derangements", "n=%d" % n,
                      moments.derangement_polynomial(n),
                      class_polynomial((1, ) * n, cap=v.cap))


def check_charlier(v):
    n_max = v.size(8)
    series = moments.moment_gf_truncated("charlier", n_max)
    for n in range(1, n_max + 1):
        closed = moments.moment_closed_charlier(n)
        yield CheckResult("charlier-closed", "n=%d" % n,
                          closed == series.coefficient(n),
                          closed.to_text(moments.CHARLIER_NAMES),
                          series.coefficient(n).to_text(
                              moments.CHARLIER_NAMES))
        # Reaching here means the closed form reduced to a polynomial in q
        yield CheckResult("charlier-polynomial", "n=%d" % n,
                          not closed.has_negative_q())


def check_hankel(v):
    table = moments.moment_table("laguerre")
    jc = laguerre_jacobi()
    for n in range(min(v.size(5), 5) + 1):
        yield compare("hankel-determinant", "n=%d" % n,
                      moments.hankel_determinant(table, n),
                      moments.hankel_product(jc, n))


def check_palindromic(v):
    """Observation, not a theorem: ``[y^j] mu_n = [y^(n+1-j)] mu_n``."""
    table = moments.moment_table("laguerre")
    for n in range(1, v.size(8) + 1):
        mu = table[n]
        mirrored = BiLaurent(dict(((n + 1 - ey, eq), c)
                                  for ((ey, eq), c) in mu.terms))
        yield compare("observation-palindromic", "n=%d" % n, mu, mirrored,
                      observation=True)


def check_golden_moments(v):
    table = moments.moment_table("laguerre")
    return _golden("moments.csv", lambda case, lhs: str(table[int(lhs)]))


# Stirling numbers
def check_stirling_inversion(v):
    n_max = v.size(8)
    defects = stirling.inversion_defects(n_max)
    yield CheckResult("stirling-inversion", "n<=%d" % n_max, not defects,
                      str(defects), "[]")


def check_stirling_specialisations(v):
    for n in range(v.size(8) + 1):
        for k in range(n + 1):
            yield compare("remark-stirling-q1", "n=%d k=%d" % (n, k),
                          stirling.stirling_S(n, k, Y, 1),
                          stirling.classical_stirling2(n, k) *
                          (1 - Y)**(n - k))
            yield compare("remark-stirling-y0", "n=%d k=%d" % (n, k),
                          stirling.stirling_S(n, k, 0, Q),
                          stirling.q_stirling2(n, k))


def check_stirling_closed(v):
    n_max = v.size(8)
    sampler = v.sampler()

    def evaluate(y, q):
        return [(n, k, stirling.stirling_closed(n, k, y, q),
                 stirling.stirling_S(n, k, y, q))
                for n in range(n_max + 1) for k in range(n + 1)]

    for index in range(v.samples):
        (point, rows) = sampler.evaluate(evaluate, ('y', 'q'))
        bad = [(n, k) for (n, k, a, b) in rows if a != b]
        yield CheckResult("stirling-closed", "sample=%02d %s" %
                          (index, _point_text(point)), not bad, str(bad), "[]")


def check_partial_fractions(v):
    sampler = v.sampler()
    for k in range(v.size(8) + 1):
        ts = list(range(1, k + 3))
        (point, holds) = sampler.evaluate(
            lambda y, q: stirling.partial_fraction_holds(k, y, q, ts),
            ('y', 'q'))
        yield CheckResult("lemma-partial-fraction",
                          "k=%d %s" % (k, _point_text(point)), holds)


# Linearization
def check_linearization(v):
    top = min(v.size(8), v.cap)
    enumerated = dict()
    for total in range(top + 1):
        for sizes in compositions(total):
            value = linearization.linearize(sizes, "enumeration", cap=v.cap)
            enumerated[sizes] = value
            yield compare("thm-linearization", "blocks=%s" %
                          _blocks_text(sizes), value,
                          linearization.linearize(sizes, "functional"))
            if len(sizes) == 3:
                yield compare("thm-linearization-closed3", "blocks=%s" %
                              _blocks_text(sizes), value,
                              linearization.closed3(*sizes))

    for (sizes, value) in sorted(enumerated.items()):
        if sizes != tuple(sorted(sizes)):
            yield compare("lemma-block-invariance", "blocks=%s" %
                          _blocks_text(sizes), value,
                          enumerated[tuple(sorted(sizes))])


def check_recurrence(v):
    top = min(v.size(7), v.cap)
    for n in range(1, top):
        for total in range(top - n):
            for rest in compositions(total):
                split = linearization.recurrence_case_split(n, rest, cap=v.cap)
                predicted = linearization.recurrence_case_prediction(
                    n, rest, cap=v.cap)
                yield compare("recurrence-case-split", "n=%d rest=%s" %
                              (n, _blocks_text(rest)), split, predicted)


def check_product_expansion(v):
    top = min(v.size(3), 3)
    for n1 in range(top + 1):
        for n2 in range(n1, top + 1):
            expansion = linearization.laguerre_product_expansion(n1, n2)
            for n3 in range(n1 + n2 + 1):
                yield compare("linearization-product",
                              "n1=%d n2=%d n3=%d" % (n1, n2, n3),
                              expansion[n3],
                              linearization.product_coefficient_from_I(
                                  n1, n2, n3))


def check_golden_linearization(v):
    return _golden("linearization.csv", lambda case, lhs: str(
        linearization.linearize(BlockSpec.parse(lhs), "enumeration",
                                cap=v.cap)))


# Al-Salam-Chihara
def check_asc_linearization(v):
    top = min(v.size(5), 5)
    sampler = v.sampler()

    def evaluate(alpha, beta, q):
        bad = []
        for n1 in range(top + 1):
            for n2 in range(top + 1):
                basis = linearization.asc_product_expansion(n1, n2, alpha,
                                                            beta, q)
                for n3 in range(n1 + n2 + 2):
                    closed = linearization.asc_linearize_C(n1, n2, n3, alpha,
                                                           beta, q)
                    if closed != (basis[n3] if n3 < len(basis) else 0):
                        bad.append((n1, n2, n3))
        return bad

    for index in range(v.samples):
        (point, bad) = sampler.evaluate(evaluate, ('alpha', 'beta', 'q'))
        yield CheckResult("thm-asc-linearization", "sample=%02d %s" %
                          (index, _point_text(point)), not bad, str(bad),
                          "[]")


def check_asc_hypergeometric(v):
    top = min(v.size(6), 6)
    sampler = v.sampler()

    def evaluate(u, alpha, beta, q):
        x = (u + 1 / u) / 2
        bad = []
        for n in range(top + 1):
            value = asc_Q(n, alpha, beta, q)(x)
            for form in (1, 2, 3):
                if asc_hypergeometric(n, u, alpha, beta, q, form) != value:
                    bad.append((n, form))
        return bad

    for index in range(v.samples):
        (point, bad) = sampler.evaluate(evaluate,
                                        ('u', 'alpha', 'beta', 'q'))
        yield CheckResult("asc-hypergeometric", "sample=%02d %s" %
                          (index, _point_text(point)), not bad, str(bad),
                          "[]")


def check_asc_moments(v):
    n_max = v.size(8)
    sampler = v.sampler()

    def evaluate(y, B, q):
        params = ASCParams(y, B)
        motzkin = moments.motzkin_moments(n_max, jacobi_for(params, q))
        series = moments.moment_gf_truncated(params, n_max, q=q)
        bad = []
        for n in range(n_max + 1):
            values = (motzkin[n], series.coefficient(n),
                      moments.asc_moment_stirling(n, params, q),
                      moments.asc_moment_explicit(n, params, q))
            if any(x != values[0] for x in values):
                bad.append(n)
        return bad

    for index in range(v.samples):
        (point, bad) = sampler.evaluate(evaluate, ('y', 'B', 'q'))
        yield CheckResult("thm-asc-moments", "sample=%02d %s" %
                          (index, _point_text(point)), not bad, str(bad),
                          "[]")


def check_asc_rescaled(v):
    top = min(v.size(6), 6)
    sampler = v.sampler()

    def evaluate(alpha, beta, q):
        params = ASCParams.from_alpha_beta(alpha, beta)
        y = params.y
        inner = XPoly([(y + 1) * alpha / 2, (q - 1) * alpha / 2])
        jc = jacobi_for(params, q)
        mu = [moments.asc_moment_stirling(m, params, q)
              for m in range(top + 1)]
        bad = []
        for n in range(top + 1):
            p = asc_rescaled(n, params, q)
            if p != asc_Q(n, alpha, beta, q).compose(inner) * alpha**n:
                bad.append((n, "Q_n"))
            if n >= 1 and moments.functional_apply(p, mu) != 0:
                bad.append((n, "functional"))
            lead = p.leading()
            if p.map_coefficients(lambda c: normalize(Fraction(c) / lead)) \
                    != jc.polynomial(n):
                bad.append((n, "monic"))
        return bad

    for index in range(v.samples):
        (point, bad) = sampler.evaluate(evaluate, ('alpha', 'beta', 'q'))
        yield CheckResult("lemma-asc-rescaled", "sample=%02d %s" %
                          (index, _point_text(point)), not bad, str(bad),
                          "[]")


def check_asc_norm(v):
    top = min(v.size(6), 6)
    sampler = v.sampler()

    def evaluate(alpha, beta, q):
        return [n for n in range(top + 1)
                if asc_norm(n, alpha, beta, q) !=
                q_pochhammer(q, n, q) * q_pochhammer(alpha * beta, n, q)]

    for index in range(v.samples):
        (point, bad) = sampler.evaluate(evaluate, ('alpha', 'beta', 'q'))
        yield CheckResult("asc-norm", "sample=%02d %s" %
                          (index, _point_text(point)), not bad, str(bad),
                          "[]")


def check_asc_laguerre_tie(v):
    top = min(v.size(3), 3)
    sampler = v.sampler()

    def evaluate(alpha, q):
        bad = []
        for n1 in range(top + 1):
            for n2 in range(top + 1):
                for n3 in range(n1 + n2 + 1):
                    closed = linearization.asc_linearize_C(
                        n1, n2, n3, alpha, q / alpha, q)
                    if closed != linearization.asc_coefficient_from_laguerre(
                            n1, n2, n3, alpha, q):
                        bad.append((n1, n2, n3))
        return bad

    for index in range(v.samples):
        (point, bad) = sampler.evaluate(evaluate, ('alpha', 'q'))
        yield CheckResult("asc-laguerre-linearization", "sample=%02d %s" %
                          (index, _point_text(point)), not bad, str(bad),
                          "[]")


def check_asc_symbolic(v):
    """The general Jacobi data and series reduce to the q-Laguerre ones."""
    n_max = v.size(8)
    general = jacobi_for(ASCParams.laguerre())
    laguerre = laguerre_jacobi()
    for n in range(n_max + 1):
        yield compare("asc-jacobi-laguerre", "b n=%d" % n, general.b(n),
                      laguerre.b(n))
        if n >= 1:
            yield compare("asc-jacobi-laguerre", "lam n=%d" % n,
                          general.lam(n), laguerre.lam(n))
    order = min(n_max, 4)
    yield compare("asc-gf-laguerre", "N=%d" % order,
                  moments.moment_gf_truncated(ASCParams.laguerre(), order),
                  moments.moment_gf_truncated("laguerre", order))
    for n in range(1, min(n_max, 6) + 1):
        yield compare("lemma-asc-stirling-moment", "laguerre n=%d" % n,
                      moments.asc_moment_stirling(n, ASCParams.laguerre()),
                      moments.moment_table("laguerre")[n])


# Bijections
def _permutation_count(n):
    return q_factorial(n, 1)


def check_phi(v):
    n_max = v.size(7)
    for n in range(1, n_max + 1):
        for k in range(1, n):
            images = set()
            failures = collections.Counter()
            for sigma in bijections.phi_domain(n, k):
                image = bijections.phi(sigma, k)
                images.add(image)
                if not bijections.in_phi_codomain(image, k):
                    failures["codomain"] += 1
                if (wex(sigma), cr(sigma)) != (wex(image), cr(image)):
                    failures["stats"] += 1
                if bijections.phi_inverse(image, k) != sigma:
                    failures["inverse"] += 1
                left = bijections.crossing_decomposition_L(sigma, k)
                if sum(left[:3]) != cr(sigma) or left[2] != left[3]:
                    failures["L"] += 1
                if bijections.crossing_decomposition_R(image, k) != left[:3]:
                    failures["R"] += 1
            codomain = sum(1 for s in all_permutations(n)
                           if bijections.in_phi_codomain(s, k))
            if len(images) != codomain:
                failures["onto"] += 1
            yield CheckResult("prop-phi", "n=%d k=%d" % (n, k), not failures,
                              str(dict(failures)), "{}")


def check_gamma(v):
    n_max = v.size(7)
    for n in range(2, n_max + 1):
        for n1 in range(1, n):
            for n2 in range(1, n - n1 + 1):
                images = set()
                failures = collections.Counter()
                for sigma in bijections.gamma_domain(n, n1, n2):
                    image = bijections.gamma(sigma, n1, n2)
                    images.add(image)
                    if not bijections.in_gamma_domain(image, n2, n1):
                        failures["codomain"] += 1
                    if (wex(sigma), cr(sigma)) != (wex(image), cr(image)):
                        failures["stats"] += 1
                    if bijections.gamma(image, n2, n1) != sigma:
                        failures["inverse"] += 1
                    counts = bijections.crossing_decomposition_G(sigma, n1, n2)
                    if sum(counts) != cr(sigma):
                        failures["G"] += 1
                    if bijections.g5_closed(sigma, n1, n2) != counts[4]:
                        failures["G5"] += 1
                codomain = sum(1 for s in all_permutations(n)
                               if bijections.in_gamma_domain(s, n2, n1))
                if len(images) != codomain:
                    failures["onto"] += 1
                yield CheckResult("prop-gamma", "n=%d n1=%d n2=%d" %
                                  (n, n1, n2), not failures,
                                  str(dict(failures)), "{}")


def check_class_maps(v):
    """``Phi_{n1}`` and ``Gamma^(n1,n2)`` carry derangement classes onto the
    rotated and swapped classes.
    """
    top = min(v.size(7), v.cap)
    for total in range(2, top + 1):
        for sizes in compositions(total):
            if len(sizes) < 2:
                continue
            members = list(enumerate_class(sizes, cap=v.cap))
            rotated = set(enumerate_class(sizes[1:] + sizes[:1], cap=v.cap))
            swapped = set(enumerate_class((sizes[1], sizes[0]) + sizes[2:],
                                          cap=v.cap))
            yield compare("lemma-phi-classes", "blocks=%s" %
                          _blocks_text(sizes),
                          set(bijections.phi(s, sizes[0]) for s in members),
                          rotated)
            yield compare("lemma-gamma-classes", "blocks=%s" %
                          _blocks_text(sizes),
                          set(bijections.gamma(s, sizes[0], sizes[1])
                              for s in members), swapped)


def check_a_identity(v):
    for n in range(v.size(7) + 1):
        bad = [(str(s), i) for s in all_permutations(n)
               for i in range(1, n + 1)
               if len(set(bijections.a_counts(s, i))) != 1]
        yield CheckResult("a-identity", "n=%d" % n, not bad, str(bad[:3]),
                          "[]")


def check_golden_bijections(v):
    def compute(case, lhs):
        sigma = Permutation.parse(lhs)
        parts = case.split('-')
        if parts[0] == "phi":
            return str(bijections.phi(sigma, int(parts[1])))
        return str(bijections.gamma(sigma, int(parts[1]), int(parts[2])))

    return _golden("bijections.csv", compute)


# Classical specialisation
def _at_one(value):
    return value.eval_at(1, 1)


def check_classical_moments(v):
    table = moments.moment_table("laguerre")
    for n in range(v.size(10) + 1):
        yield compare("classical-moments", "n=%d" % n, _at_one(table[n]),
                      _permutation_count(n))


def check_classical_polynomials(v):
    for n in range(v.size(8) + 1):
        specialised = laguerre_poly(n).map_coefficients(_at_one)
        yield compare("classical-laguerre", "explicit n=%d" % n, specialised,
                      classical_laguerre(n))
        yield compare("classical-laguerre", "recurrence n=%d" % n,
                      specialised, classical_laguerre(n, "recurrence"))


def check_classical_linearization(v):
    top = min(v.size(4), 4)
    for (n1, n2, n3) in itertools.product(range(top + 1), repeat=3):
        yield compare("classical-linearization",
                      "n1=%d n2=%d n3=%d" % (n1, n2, n3),
                      _at_one(linearization.closed3(n1, n2, n3)),
                      linearization.classical_linearization_sum(n1, n2, n3))
    for n1 in range(top + 1):
        for n2 in range(top + 1):
            expansion = linearization.classical_product_expansion(n1, n2)
            for n3 in range(n1 + n2 + 1):
                yield compare(
                    "classical-coefficient", "n1=%d n2=%d n3=%d" %
                    (n1, n2, n3), expansion[n3],
                    linearization.classical_linearization_coefficient(
                        n1, n2, n3))


def check_classical_counts(v):
    top = min(v.size(8), v.cap)
    for total in range(top + 1):
        for sizes in compositions(total):
            count = sum(1 for _ in enumerate_class(sizes, cap=v.cap))
            yield compare("classical-derangement-count", "blocks=%s" %
                          _blocks_text(sizes),
                          _at_one(linearization.linearize(sizes,
                                                          "functional")),
                          count)


Verifier.register_check(check_moment_routes, "moments")
Verifier.register_check(check_moment_enumeration_to_cap, "moments")
Verifier.register_check(check_orthogonality, "moments")
Verifier.register_check(check_laguerre_explicit, "moments")
Verifier.register_check(check_derangements, "moments")
Verifier.register_check(check_charlier, "moments")
Verifier.register_check(check_hankel, "moments")
Verifier.register_check(check_palindromic, "moments")
Verifier.register_check(check_golden_moments, "moments")
Verifier.register_check(check_stirling_inversion, "stirling")
Verifier.register_check(check_stirling_specialisations, "stirling")
Verifier.register_check(check_stirling_closed, "stirling")
Verifier.register_check(check_partial_fractions, "stirling")
Verifier.register_check(check_linearization, "linearization")
Verifier.register_check(check_recurrence, "linearization")
Verifier.register_check(check_product_expansion, "linearization")
Verifier.register_check(check_golden_linearization, "linearization")
Verifier.register_check(check_asc_linearization, "asc")
Verifier.register_check(check_asc_hypergeometric, "asc")
Verifier.register_check(check_asc_moments, "asc")
Verifier.register_check(check_asc_rescaled, "asc")
Verifier.register_check(check_asc_norm, "asc")
Verifier.register_check(check_asc_laguerre_tie, "asc")
Verifier.register_check(check_asc_symbolic, "asc")
Verifier.register_check(check_phi, "bijections")
Verifier.register_check(check_gamma, "bijections")
Verifier.register_check(check_class_maps, "bijections")
Verifier.register_check(check_a_identity, "bijections")
Verifier.register_check(check_golden_bijections, "bijections")
Verifier.register_check(check_classical_moments, "classical")
Verifier.register_check(check_classical_polynomials, "classical")
Verifier.register_check(check_classical_linearization, "classical")
Verifier.register_check(check_classical_counts, "classical")
