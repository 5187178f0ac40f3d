import pytest

from maxitive import INF, ONE, ZERO, NotSigmaFinite, Verdict, make_space, maxitive_from_atoms
from maxitive.harness import (
    CHECKS,
    FailureRecord,
    PreconditionNotTwoValued,
    TrialConfig,
    TrialReport,
    check_leastness,
    random_additive,
    random_maxitive,
    run_trials,
    shrink,
    verify_corollary,
    verify_representation,
    verify_sugeno_murofushi,
)
from maxitive.core import AdditiveMeasure

from strategies import q


def test_random_maxitive_deterministic():
    cfg = TrialConfig(seed=1, trials=10)
    assert random_maxitive(cfg, 0) == random_maxitive(cfg, 0)
    assert random_additive(cfg, 3) == random_additive(cfg, 3)
    others = {random_maxitive(TrialConfig(seed=s, trials=10), 0) for s in range(2, 12)}
    assert len(others) > 1


def test_zero_grid_gives_zero_measure():
    cfg = TrialConfig(seed=5, trials=20, value_grid=(ZERO,))
    for i in range(20):
        assert random_maxitive(cfg, i).is_zero()


def test_infinity_only_grid():
    cfg = TrialConfig(seed=5, trials=5, value_grid=(INF,))
    assert set(random_maxitive(cfg, 0).atom_values) == {INF}
    rng = cfg.rng(0, "x")
    assert cfg.draw(rng, finite=True).is_finite


def test_rational_mode():
    cfg = TrialConfig(seed=9, trials=50, rational_mode=True, infinity_weight=0)
    values = {v for i in range(50) for v in random_maxitive(cfg, i).atom_values}
    assert all(v.is_finite for v in values)
    assert len(values) > 7


@pytest.mark.parametrize(
    "kwargs",
    [dict(seed=-1, trials=1), dict(seed=2**64, trials=1), dict(seed=0, trials=-1),
     dict(seed=0, trials=1, max_atoms=7), dict(seed=0, trials=1, max_atoms=0),
     dict(seed=0, trials=1, value_grid=()), dict(seed=0, trials=1, infinity_weight=2)],
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        TrialConfig(**kwargs)


def test_representation_examples(abc):
    verdict = verify_representation(maxitive_from_atoms(abc, ["1/2", 1, 0]))
    assert verdict
    assert verdict.details["m"].atom_values == (q("1/2"), ONE, ZERO)
    assert verdict.details["c"].values == (q("1/2"), ONE, ZERO)
    zero = verify_representation(maxitive_from_atoms(abc, [0, 0, 0]))
    assert zero and zero.details["c"].values == (ZERO,) * 3
    inf = verify_representation(maxitive_from_atoms(make_space("ab"), [INF, 1]))
    assert inf and inf.details["c"].values == (INF, ONE)


def test_corollary_examples(abc):
    verdict = verify_corollary(maxitive_from_atoms(abc, [1, 0, 1]))
    assert verdict
    assert verdict.details["m"].atom_values == (ONE, ZERO, ONE)
    assert verify_corollary(maxitive_from_atoms(make_space("a"), [1]))
    with pytest.raises(PreconditionNotTwoValued):
        verify_corollary(maxitive_from_atoms(make_space("ab"), ["1/2", 1]))


def test_sugeno_murofushi_examples(abc):
    ab = make_space("ab")
    verdict = verify_sugeno_murofushi(maxitive_from_atoms(ab, [3, "1/2"]), maxitive_from_atoms(ab, [2, 2]))
    assert verdict and verdict.details["c"].values == (q("3/2"), q("1/4"))
    refused = verify_sugeno_murofushi(maxitive_from_atoms(ab, [0, 1]), maxitive_from_atoms(ab, [1, 0]))
    assert refused and refused.details["absolutely_continuous"] is False
    tau = maxitive_from_atoms(abc, ["1/3", 2, 0])
    same = verify_sugeno_murofushi(tau, tau)
    assert same and same.details["c"].values == (ONE, ONE, ZERO)
    with pytest.raises(NotSigmaFinite):
        verify_sugeno_murofushi(tau, maxitive_from_atoms(abc, [INF, 1, 1]))


def test_check_leastness(abc):
    tau = maxitive_from_atoms(abc, [1, 2, 0])
    assert check_leastness(tau, AdditiveMeasure(abc, [0, 5, 5])) is None
    assert check_leastness(tau, AdditiveMeasure(abc, [1, 2, 0]))
    assert check_leastness(tau, AdditiveMeasure(abc, [INF, 3, 0]))


def test_empty_run():
    report = run_trials(TrialConfig(seed=3, trials=0))
    assert report.trials_run == 0 and report.failures == 0 and report.first_failure is None
    assert report.ok


def test_run_is_deterministic():
    cfg = TrialConfig(seed=7, trials=150, max_atoms=5)
    first, second = run_trials(cfg), run_trials(cfg)
    assert first.to_json() == second.to_json()
    assert first.to_text() == second.to_text()
    assert first.failures == 0
    assert first.checks["representation"] == 150


def test_report_invariant():
    cfg = TrialConfig(seed=0, trials=1)
    with pytest.raises(ValueError):
        TrialReport(cfg, 1, 1, None)
    with pytest.raises(ValueError):
        TrialReport(cfg, 1, 0, FailureRecord(0, "x", {}, "", None))


def _broken_variation(space, inputs):
    # fails whenever some atom carries the value 7, regardless of the others
    if any(v == q("7") for v in inputs["tau"]):
        return Verdict(False, 0, "planted")
    return Verdict(True)


def test_shrink_deletes_then_zeroes():
    space = make_space("abcd")
    inputs = {"tau": [ONE, q("7"), q("1/2"), q("7")], "set": [ONE, ONE, ZERO, ONE]}
    s_space, s_inputs, verdict = shrink(_broken_variation, space, inputs)
    assert s_space.atoms == ("d",)
    assert s_inputs == {"tau": [q("7")], "set": [ZERO]}
    assert verdict.stage == "planted"


def test_shrink_requires_failure():
    with pytest.raises(ValueError):
        shrink(_broken_variation, make_space("a"), {"tau": [ONE]})


def test_failures_are_reported_and_shrunk(monkeypatch):
    monkeypatch.setitem(CHECKS, "variation_oracle", _broken_variation)
    cfg = TrialConfig(seed=11, trials=60, max_atoms=4)
    report = run_trials(cfg)
    assert report.failures > 0
    failure = report.first_failure
    assert failure.property == "variation_oracle"
    assert failure.inputs["tau"] == ["7"]
    assert len(failure.inputs["atoms"]) == 1
    replay = random_maxitive(cfg, failure.trial_index)
    assert q("7") in replay.atom_values
    assert "verdict: FAIL" in report.to_text()
    assert run_trials(cfg).to_json() == report.to_json()


def test_exceptions_count_as_failures(monkeypatch):
    def explode(space, inputs):
        raise RuntimeError("boom")

    monkeypatch.setitem(CHECKS, "representation", explode)
    report = run_trials(TrialConfig(seed=1, trials=3, max_atoms=3))
    assert report.failures == 3
    assert report.first_failure.stage == "exception"
    assert "boom" in report.first_failure.witness
