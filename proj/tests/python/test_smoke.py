import math

import pytest

import contractsched as cs


def test_roots_and_robustness():
    assert cs.cr_br(4.0) == (2.0, 2.0)
    c, b = cs.cr_br(4.5)
    assert c == pytest.approx(1.5) and b == pytest.approx(3.0)
    assert cs.exponential_robustness(2.0) == 4.0
    with pytest.raises(ValueError):
        cs.cr_br(3.9)


def test_schedule_evaluation():
    s = cs.ContractSchedule.geometric(2.0)
    assert cs.largest_completed(s, 6.0) == 4.0
    rec = cs.acceleration_ratio(s, 1.5)
    assert rec.largest == 1.0 and rec.ratio == 1.5
    assert [c for _, _, c in cs.schedule_prefix(s, 10.0)] == [2.0, 6.0, 14.0]
    assert cs.empirical_robustness(s, 20) == pytest.approx(4 - 2 ** -18)


def test_predictions():
    p = cs.pareto_schedule(4.0, 10.0)
    assert cs.acceleration_ratio(p, 10.0).ratio == pytest.approx(1.75)
    assert cs.buffered_ratio_bound(4.0, 0.1, 0.1) == pytest.approx(2 * 1.1 / 0.9)
    lower, dom = cs.h_thresholds(4.0)
    assert lower == pytest.approx(0.101, abs=5e-4) and dom == pytest.approx(0.2)


def test_queries():
    fam = cs.robust_family(4.0, 10, 0.2)
    assert fam.count == 10
    bits = cs.encode_answers(5, 10)
    assert bits.no_count() == 5
    assert cs.decode_robust(bits, 10, 0.2) == 3
    ideal = cs.ideal_family(4.0, 2)
    assert cs.ideal_select(ideal, cs.AnswerBits([True, False])) == 2
    assert cs.robust_base(4.0, 100, 0.1)["bound"] == pytest.approx(2 ** 1.21)
    assert cs.consistency_lower_bound(1) == pytest.approx(math.sqrt(8))


def test_experiment_is_reproducible():
    cfg = cs.ExperimentConfig(setting="query", points=10, trials=5, seed=3)
    a = cs.run_experiment(cfg)
    b = cs.run_experiment(cfg)
    assert a == b
    assert len(a["grid"]) == 10 and len(a["rows"]) == 4
    for row in a["rows"]:
        assert 0 <= row["strong_improvement_pct"] <= row["improvement_pct"] <= 100
