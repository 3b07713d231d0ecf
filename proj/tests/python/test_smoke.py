"""End-to-end checks of the python bindings against frozen small cases."""

import json

import pytest

import gridprice as gp


def two_job_scenario():
    s = gp.Scenario()
    s.horizon = 3
    s.max_deadline = 2
    s.thresholds = [10.0, 5.0]
    s.jobs = [
        gp.Job(id=1, arrival=1, deadline_class=2, demand=4.0),
        gp.Job(id=2, arrival=2, deadline_class=1, demand=2.0),
    ]
    return s


def test_simulate_matches_hand_computation():
    s = two_job_scenario()
    profile = gp.simulate(s, gp.PriceSchedule([1, 1, 1]))
    assert profile.u == [0.0, 6.0, 0.0]
    assert profile.consumed_at == {1: 2, 2: 2}
    assert gp.peak(profile) == 6.0

    profile = gp.simulate(s, gp.PriceSchedule([2, 2, 2]))
    assert profile.u == [4.0, 2.0, 0.0]
    assert gp.mse(profile, [2.0, 2.0, 2.0]) == pytest.approx(8.0 / 3.0)


def test_validation_raises_value_error():
    s = two_job_scenario()
    s.thresholds = [5.0, 10.0]
    assert any("not strictly decreasing" in msg for msg in gp.validate(s))
    with pytest.raises(ValueError):
        gp.simulate(s, gp.PriceSchedule([1, 1, 1]))


def test_solvers_agree_on_reference_scenario():
    s = two_job_scenario()
    exact = gp.minimax_dijkstra(s)
    assert exact.objective_value == 4.0
    assert exact.schedule.indices == [2, 1, 1]
    assert exact.method == "dijkstra"

    brute = gp.brute_force(s, gp.Objective.peak_min)
    assert brute.objective_value == exact.objective_value
    assert brute.schedule.indices == exact.schedule.indices

    assert gp.greedy(s, gp.Objective.peak_min).objective_value == 6.0
    uniform = gp.uniform_best(s, gp.Objective.peak_min)
    assert uniform.chosen_index == 2
    assert uniform.result.objective_value == 4.0

    s.supply = [4.0, 2.0, 0.0]
    window = gp.sliding_window(s, gp.Objective.match_supply, 2)
    assert window.objective_value == 0.0
    assert window.schedule.indices == [2, 1, 1]


def test_budget_refusal_raises():
    s = gp.generate_scenario(30, 3, [1.0, 1.0, 1.0],
                             gp.DemandModel.homogeneous(1.0), 5)
    with pytest.raises(RuntimeError):
        gp.brute_force(s, gp.Objective.peak_min, budget=1000)


def test_graph_size_closed_form():
    size = gp.graph_size(3, 24)
    assert (size.vertices, size.edges) == (209, 612)
    size = gp.graph_size(6, 24)
    assert (size.vertices, size.edges) == (155522, 902016)
    with pytest.raises(OverflowError):
        gp.graph_size(17, 24)


def test_poisson_series_and_ratio():
    assert gp.expected_max_poisson(2.0, 1) == pytest.approx(2.0, abs=1e-9)
    assert gp.expected_min_poisson(2.0, 1) == pytest.approx(2.0, abs=1e-9)
    bound = gp.ratio_bound([2.0], 24)
    assert not bound.unbounded
    assert bound.value > 1.0


def test_hardness_reduction_round_trip():
    instance = gp.SubsetSumInstance([3, 2, 1], 3)
    verdict = gp.verify(instance)
    assert verdict.is_yes
    assert verdict.witness == [1]
    assert verdict.best_omega == gp.alpha_threshold(instance)
    assert str(gp.Rational(7, 8)) == "7/8"
    assert verdict.best_omega == gp.Rational(7, 8)

    reduced = gp.reduce(instance)
    assert reduced.periods == 4
    assert gp.price_enumeration_optimum(reduced) == verdict.best_omega

    assert not gp.verify(gp.SubsetSumInstance([4, 2], 5)).is_yes


def test_generator_round_trip_and_rng():
    rng = gp.SplitMix64(1234567)
    assert rng.next() == 6457827717110365317
    assert rng.next() == 3203168211198807973

    s = gp.generate_scenario(8, 2, [1.5, 0.5], gp.DemandModel.homogeneous(1.0),
                             99)
    again = gp.generate_scenario(8, 2, [1.5, 0.5],
                                 gp.DemandModel.homogeneous(1.0), 99)
    assert gp.scenario_to_json(s) == gp.scenario_to_json(again)

    parsed = gp.scenario_from_json(gp.scenario_to_json(s))
    assert parsed.horizon == s.horizon
    assert len(parsed.jobs) == len(s.jobs)


def test_online_matches_offline_greedy():
    s = two_job_scenario()
    online = gp.run_online(s, gp.OnlineAlgorithm.greedy, gp.Objective.peak_min)
    offline = gp.greedy(s, gp.Objective.peak_min)
    assert online.schedule.indices == offline.schedule.indices
    assert online.method == "online-greedy"

    view = gp.CausalView(s, 1)
    assert len(view.visible_jobs()) == 1
    rates = gp.estimate_rates(view, 10)
    assert rates.alpha_hat == [0.0, 1.0]
    assert rates.mean_demand == 4.0


def test_experiment_runner_round_trip():
    config = {
        "objective": "peak",
        "algorithms": ["greedy", "dijkstra"],
        "K": 5,
        "N": 2,
        "alphas": [0.8, 0.8],
        "trials": 3,
        "seed": 9,
    }
    csv_text, json_text, schedules_text = gp.run_experiment_json(
        json.dumps(config))
    assert csv_text.splitlines()[0] == \
        "algorithm,K,N,W,mean_ratio,mean_runtime_ms,trials"
    assert "dijkstra,5,2,0,1.000000,0.000,3" in csv_text
    rows = json.loads(json_text)
    assert {row["algorithm"] for row in rows} == {"greedy", "dijkstra"}
    assert json.loads(schedules_text)
