"""Tests for the property suites behind `frieze verify`."""

import random

import pytest

from src.config import FriezeConfig
from src.models import Boundary, QuiddityPair, QuidditySequence, SuiteResult
from src.verify import SUITES, run_suites
from src.verify.suites import (
    MAX_REPORTED_FAILURES,
    MAX_TUBE_RANK,
    Tally,
    ear_scripts,
    random_infinite,
    random_skeletal,
)

SMALL = FriezeConfig(verify_samples=20, verify_max_length=6, verify_max_entry=6, verify_workers=2)


# ==================== Tally Tests ====================


class TestTally:
    def test_counts_cases_and_failures(self):
        tally = Tally()
        tally.check(True, "fine")
        tally.check(False, "broken")
        assert tally.cases == 2
        assert tally.failures == ["broken"]

    def test_failures_are_truncated(self):
        tally = Tally()
        for k in range(MAX_REPORTED_FAILURES + 5):
            tally.check(False, str(k))
        assert len(tally.failures) == MAX_REPORTED_FAILURES

    def test_record(self):
        tally = Tally()
        tally.record(10, ["a", "b"])
        assert tally.cases == 10
        assert tally.failures == ["a", "b"]


# ==================== Generator Tests ====================


class TestGenerators:
    def test_random_skeletal(self):
        rng = random.Random(1)
        for _ in range(50):
            q = random_skeletal(rng, 6, 5)
            assert 1 not in q.entries
            assert any(a > 2 for a in q)

    def test_random_infinite_is_seeded(self):
        first = [random_infinite(random.Random(3), 6, 5) for _ in range(3)]
        second = [random_infinite(random.Random(3), 6, 5) for _ in range(3)]
        assert first == second

    def test_tube_ranks_reach_eight(self):
        rng = random.Random(2)
        ranks = {len(random_skeletal(rng, MAX_TUBE_RANK, 6)) for _ in range(400)}
        assert max(ranks) == 8


# ==================== Ear Script Tests ====================


class TestEarScripts:
    pair = QuiddityPair(QuidditySequence.of(2, 3, 3), QuidditySequence.of(4, 3))

    def test_depth_zero_is_the_pair(self):
        assert list(ear_scripts(self.pair, 0)) == [((), self.pair)]

    def test_one_ear_per_gap(self):
        scripts = [steps for steps, _ in ear_scripts(self.pair, 1)]
        assert len(scripts) == 1 + 3 + 2
        assert sum(1 for steps in scripts if steps and steps[0].boundary is Boundary.B2) == 2

    def test_gaps_follow_the_grown_boundary(self):
        # after one ear on B1 the outer sequence has 4 entries
        scripts = [steps for steps, _ in ear_scripts(self.pair, 2)]
        assert len(scripts) == 1 + 5 + 3 * (4 + 2) + 2 * (3 + 3)
        assert len(set(scripts)) == len(scripts)

    def test_every_short_script_reduces_back(self):
        [result] = run_suites(["ears"], seed=1, samples=1, config=SMALL)
        assert result.cases > 0
        assert result.passed, result.failures


# ==================== Window Limit Tests ====================


class TestWindowLimitInSuites:
    @pytest.mark.parametrize("name", ["frieze", "growth", "reduction"])
    def test_suites_respect_small_window(self, name):
        config = FriezeConfig(
            verify_samples=10, verify_max_length=6, verify_max_entry=5, subset_window_limit=4
        )
        [result] = run_suites([name], seed=3, samples=10, workers=1, config=config)
        assert result.passed, result.failures


# ==================== Runner Tests ====================


class TestRunSuites:
    @pytest.mark.parametrize("name", sorted(SUITES))
    def test_suite_passes(self, name):
        [result] = run_suites([name], seed=1, samples=20, workers=1, config=SMALL)
        assert isinstance(result, SuiteResult)
        assert result.name == name
        assert result.cases > 0
        assert result.passed, result.failures

    def test_results_keep_order(self):
        results = run_suites(["negatives", "growth"], seed=1, samples=10, config=SMALL)
        assert [r.name for r in results] == ["negatives", "growth"]

    def test_same_seed_same_cases(self):
        first = run_suites(["growth"], seed=5, samples=10, config=SMALL)
        second = run_suites(["growth"], seed=5, samples=10, config=SMALL)
        assert first[0].cases == second[0].cases

    def test_unknown_suite(self):
        with pytest.raises(KeyError):
            run_suites(["nope"], config=SMALL)

    def test_all_suites_registered(self):
        assert set(SUITES) == {
            "reduction", "frieze", "growth", "quiver", "triangulation", "ears", "tube", "negatives",
        }

    def test_result_json(self):
        [result] = run_suites(["negatives"], seed=1, samples=5, config=SMALL)
        data = result.to_json()
        assert data["name"] == "negatives"
        assert data["passed"] is True
        assert data["failures"] == []
