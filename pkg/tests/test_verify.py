import pytest
from hypothesis import HealthCheck, given, settings

from rootcluster.clustercalc import cluster_report, descending_chain
from rootcluster.constructions import alternating, metacyclic, symmetric, wreathlike
from rootcluster.errors import InvariantViolation
from rootcluster.verify import InvariantSuite, check_chains, verify_pair

from strategies import transitive_pairs


def broken(message):
    raise InvariantViolation(message)


class TestInvariantSuite:
    def test_expect(self):
        suite = InvariantSuite("sample")
        assert suite.expect("equal", 2, 2)
        assert not suite.expect("unequal", 2, 3)
        report = suite.report()
        assert (report.passed, report.total, report.failures) == (False, 2, 1)
        assert report.assertions[1].actual == 3

    def test_attempt(self):
        suite = InvariantSuite("sample")
        assert suite.attempt("sum", sum, [1, 2]) == 3
        assert suite.attempt("law", broken, "r does not divide n") is None
        report = suite.report()
        assert report.failures == 1
        assert report.assertions[1].actual == "r does not divide n"

    def test_skip_does_not_fail(self):
        suite = InvariantSuite("sample")
        suite.expect_true("ok", 1)
        suite.skip("tower sweep")
        report = suite.report()
        assert report.passed
        assert report.skipped == ("tower sweep",)

    def test_empty_suite_passes(self):
        assert InvariantSuite("empty").report().passed


def chain_report(P):
    suite = InvariantSuite(P.name)
    check_chains(suite, P, cluster_report(P).r)
    return suite.report()


class TestChainChecks:
    @pytest.mark.parametrize("pair", [lambda: metacyclic(12), lambda: wreathlike(3, 2)])
    def test_cluster_size_over_the_normal_closure(self, pair):
        report = chain_report(pair())
        found = [a for a in report.assertions if a.name == "r_K(L) divides t·r_F(L)"]
        assert [(a.expected, a.actual) for a in found] == [(0, 0)]
        assert report.passed

    def test_every_descending_step_is_recomputed(self):
        P = metacyclic(8)
        assert descending_chain(P).step_indices == (2, 2, 2)
        report = chain_report(P)
        steps = [a for a in report.assertions if a.name.startswith("descending step")]
        assert [(a.expected, a.actual) for a in steps] == [(2, 2)] * 3
        assert report.passed

    def test_odd_root_chain_has_no_steps(self):
        report = chain_report(metacyclic(9))
        assert not any(a.name.startswith("descending step") for a in report.assertions)
        assert report.passed


class TestVerifyPair:
    @pytest.mark.parametrize(
        "pair",
        [
            lambda: metacyclic(12),
            lambda: symmetric(4),
            lambda: wreathlike(3, 2),
            lambda: alternating(4),
        ],
    )
    def test_passes(self, pair, limits):
        report = verify_pair(pair(), limits)
        assert [a.name for a in report.assertions if not a.passed] == []
        assert report.total > 10

    def test_many_clusters_skip_the_tower_sweep(self, limits):
        report = verify_pair(metacyclic(9), limits)
        assert report.passed
        assert report.skipped == ("tower sweep",)

    @pytest.mark.slow
    @settings(
        max_examples=10,
        deadline=None,
        suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow],
    )
    @given(transitive_pairs())
    def test_random_pairs(self, P):
        assert verify_pair(P).passed
