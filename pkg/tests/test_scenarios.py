import pytest

from froblab.scenarios import SCENARIOS, Check, ScenarioResult, run_scenario
from froblab.laws import LawReport
from froblab.matrix import I, ident, MatMorphism

REGISTRY = ["yb-lax-preservation", "yb-not-preserved", "weak-yb-preservation",
            "weak-yb-from-splitting", "weak-distlaw-preservation", "distlaw-not-preserved",
            "weak-bimonoid-preservation", "bimonoid-not-preserved", "alternating-chain",
            "prebimonoidal-compose", "prebimonoidal-from-separable", "strong-iff-braided",
            "barbell-counterexample"]


def test_registry_is_frozen():
    assert list(SCENARIOS) == REGISTRY


@pytest.mark.parametrize("name", REGISTRY)
def test_scenario_passes(name):
    res = run_scenario(name)
    assert res.passed, [c.to_dict() for c in res.checks if not c.passed]
    assert res.to_dict()["scenario"] == name


def test_negative_halves_are_expected_failures():
    res = run_scenario("bimonoid-not-preserved")
    negative = [c for c in res.checks if not c.expected]
    assert negative and all(not c.observed for c in negative)
    assert negative[0].failed_laws == ["delta-eta", "epsilon-eta", "epsilon-mu"]


def test_expected_failure_set_must_match():
    report = LawReport()
    report.check("a", ident(I), MatMorphism.scalar(2))
    res = ScenarioResult("x", "claim")
    res.add("exact set", report, expect_failed={"a"})
    res.add("wrong set", report, expect_failed={"b"})
    assert [c.passed for c in res.checks] == [True, False]


def test_empty_scenario_does_not_pass():
    assert not ScenarioResult("x", "claim").passed
    assert Check("c", True, True).to_dict()["passed"]


def test_unknown_scenario():
    with pytest.raises(KeyError):
        run_scenario("nope")
