"""Tests for the verification suites.
"""
import mock
import pytest

from qlaguerre.config import Config
from qlaguerre.errors import NotInDomain
from qlaguerre.verifier import CheckResult, Verifier, read_golden


def results_summary(results):
    return [(r.name, r.detail, r.status) for r in results]


def test_suites_registered():
    assert list(Verifier.suites) == ["moments", "stirling", "linearization",
                                     "asc", "bijections", "classical"]


@pytest.mark.parametrize("suite", ["moments", "stirling", "linearization",
                                   "bijections", "classical"])
def test_small_suites_pass(suite):
    results = Verifier(max_n=3, samples=2).run(suite)
    assert results
    assert not any(r.failed for r in results), [r for r in results
                                                if r.failed]


def test_asc_suite_passes():
    results = Verifier(max_n=2, samples=2).run("asc")
    assert all(r.passed for r in results), [r for r in results
                                            if not r.passed]


def test_results_sorted_and_deterministic():
    first = Verifier(max_n=3, samples=2, seed=11).run("stirling")
    second = Verifier(max_n=3, samples=2, seed=11, workers=3).run("stirling")
    assert results_summary(first) == results_summary(second)
    keys = [(r.name, r.detail) for r in first]
    assert keys == sorted(keys)


def test_observations_never_fail():
    held = CheckResult("observation-x", "n=1", True, observation=True)
    broken = CheckResult("observation-x", "n=2", False, "1", "2",
                         observation=True)
    assert (held.status, broken.status) == ("OBSERVED", "NOT-HELD")
    assert not held.failed and not broken.failed
    assert CheckResult("identity", "n=1", False).failed


def test_palindromic_check_is_an_observation():
    results = Verifier(max_n=4, samples=2).run("moments")
    palindromic = [r for r in results
                   if r.name == "observation-palindromic"]
    assert [r.detail for r in palindromic] == ["n=1", "n=2", "n=3", "n=4"]
    assert all(r.observation for r in palindromic)
    assert all(r.status in ("OBSERVED", "NOT-HELD") for r in palindromic)


def test_unknown_suite():
    with pytest.raises(ValueError):
        Verifier().run("hermite")


def test_domain_error_becomes_failure():
    def check_raises(verifier):
        raise NotInDomain("outside")
        yield

    def check_passes(verifier):
        yield CheckResult("passing", "n=1", True)

    with mock.patch.dict(Verifier.suites,
                         {"extra": [check_raises, check_passes]}):
        results = Verifier().run("extra")

    assert results_summary(results) == [
        ("check_raises", "error: outside", "FAIL"),
        ("passing", "n=1", "PASS")]
    assert "extra" not in Verifier.suites


def test_from_config():
    config = Config(cap=7, seed=3, samples=4, workers=2)
    verifier = Verifier.from_config(config, max_n=5)
    assert (verifier.cap, verifier.seed, verifier.samples, verifier.workers,
            verifier.max_n) == (7, 3, 4, 2, 5)
    assert verifier.size(9) == 5
    assert Verifier().size(9) == 9


def test_samplers_are_fresh():
    verifier = Verifier(seed=13)
    assert verifier.sampler().rational() == verifier.sampler().rational()


def test_golden_files():
    rows = read_golden("linearization.csv")
    assert rows[0]["case"] == "I"
    assert rows[0]["lhs"] == "1,1"
    assert all(row["equal"] == "true" for row in rows)


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
