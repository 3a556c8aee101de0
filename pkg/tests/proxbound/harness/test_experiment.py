from fractions import Fraction

import pytest
from prometheus_client import CollectorRegistry

from proxbound.common.data_types import CheckFailure
from proxbound.expansion import choose_t
from proxbound.harness import (
    ExperimentConfig,
    ExperimentRunner,
    ExperimentRunnerParams,
    compute_row,
    run_experiment,
)
from proxbound.harness.data_types import TIMING_COLUMNS
from proxbound.harness.run_metrics import PrometheusRunMetrics, RunMetrics, row_outcome


class FakeRunMetrics(RunMetrics):
    def __init__(self):
        self.outcomes: list[str] = []

    def record(self, row):
        self.outcomes.append(row_outcome(row))


def make_config(**overrides) -> ExperimentConfig:
    data = {
        "phi": [0, 0, 0, 1],
        "n": [2],
        "generator_params": {"start": 0},
        "t": 1,
    }
    data.update(overrides)
    return ExperimentConfig.model_validate(data)


def without_timing(row) -> dict:
    data = row.to_dict()
    for column in TIMING_COLUMNS:
        data.pop(column)
    return data


def test_worked_example_row():
    row = compute_row(make_config(), 2)

    assert row.error is None
    assert (row.image_size, row.t, row.s) == (3, 1, 25)
    assert (row.q_strict, row.q_relaxed) == (8, 16)
    assert (row.p_size, row.family_size) == (2, 4)
    assert row.heavy_count == 3
    assert row.heavy_slack == Fraction(4, 5)
    assert row.per_value_failed == 3
    assert row.final_floor == 36
    assert row.final_holds is False
    assert row.max_occupied_ratio == 1
    assert row.p_ratio_approx == 0.5
    assert row.wall_time_approx is not None
    assert row.gamma0_size is None
    assert not row.failed_check


def test_singleton_segments():
    row = compute_row(make_config(t=2), 2)
    assert (row.q_strict, row.q_relaxed) == (0, 0)
    assert row.p_size == 0


def test_relaxed_only():
    row = compute_row(make_config(quadruples="relaxed", lower_chain=False), 2)
    assert row.q_strict is None
    assert row.q_relaxed == 16
    assert row.heavy_count is None


def test_chosen_t():
    row = compute_row(make_config(t=None, s=2, generator_params={}), 8)
    assert row.t == choose_t(8, row.image_size, 2)


def test_accounting_row():
    row = compute_row(make_config(accounting=True), 3)

    assert row.error is None
    assert row.q_exceptional + row.q_residual == row.q_strict
    assert row.exceptional_holds and row.residual_holds and row.cross_check_ok
    assert row.incidences is not None
    assert row.sz_bound_approx > 0
    assert not row.failed_check


def test_guardrail_is_recorded():
    row = compute_row(make_config(), 4096)
    assert row.error.startswith("GuardrailError")
    assert row.image_size is None
    assert not row.failed_check


def test_precondition_is_recorded():
    config = make_config(generator="explicit-file", generator_params={"values": ["1", "2"]})
    row = compute_row(config, 3)
    assert row.error.startswith("PreconditionError")


def test_check_failure_is_recorded(monkeypatch):
    def failing(*args, **kwargs):
        raise CheckFailure("Curve incidences do not reproduce |Q|", {"n": 2})

    monkeypatch.setattr("proxbound.harness.experiment.verify_upper_accounting", failing)
    row = compute_row(make_config(accounting=True), 2)
    assert row.error.startswith("check:")
    assert row.failed_check
    assert row.q_strict == 8


@pytest.mark.parametrize(
    "generator, params",
    [
        ("arithmetic", {"step": 0}),
        ("explicit-file", {"values": ["1", "1", "2"]}),
        ("explicit-file", {"path": "no-such-values.txt"}),
    ],
)
def test_invalid_generator_is_recorded_per_row(generator, params, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    config = make_config(n=[2, 3], generator=generator, generator_params=params)
    result = run_experiment(config)

    assert [row.n for row in result.rows] == [2, 3]
    for row in result.rows:
        assert row.error.startswith("PreconditionError")
        assert row.image_size is None
    assert not result.failed_check


def test_deterministic():
    config = make_config(
        n=[3, 5, 6], generator="random-integer", generator_params={}, t=None, seed=17
    )
    first = run_experiment(config)
    second = run_experiment(config)
    assert [without_timing(row) for row in first.rows] == [
        without_timing(row) for row in second.rows
    ]


@pytest.mark.asyncio
async def test_runner_keeps_order_and_records_metrics():
    metrics = FakeRunMetrics()
    runner = ExperimentRunner(
        ExperimentRunnerParams(
            config=make_config(n=[2, 3, 4, 4096], t=None, max_concurrency=3),
            metrics=metrics,
        )
    )
    result = await runner.run()

    assert [row.n for row in result.rows] == [2, 3, 4, 4096]
    assert not result.failed_check
    assert sorted(metrics.outcomes) == ["error", "ok", "ok", "ok"]


@pytest.mark.asyncio
async def test_runner_without_metrics():
    runner = ExperimentRunner(ExperimentRunnerParams(config=make_config(n=[1, 2])))
    result = await runner.run()
    assert len(result) == 2


def test_prometheus_metrics_count_outcomes(monkeypatch, tmp_path):
    def failing(*args, **kwargs):
        raise CheckFailure("Curve incidences do not reproduce |Q|", {"n": 3})

    monkeypatch.setattr("proxbound.harness.experiment.verify_upper_accounting", failing)
    registry = CollectorRegistry()
    metrics = PrometheusRunMetrics(registry)
    run_experiment(make_config(n=[2, 3], accounting=True), metrics)
    run_experiment(make_config(n=[4096]), metrics)

    def rows(outcome):
        return registry.get_sample_value("proxbound_rows_total", {"outcome": outcome})

    assert rows("failed_check") == 2
    assert rows("error") == 1
    assert rows("ok") == 0
    assert registry.get_sample_value("proxbound_row_seconds_count") == 3

    text = metrics.exposition()
    assert 'proxbound_rows_total{outcome="failed_check"} 2.0' in text

    path = tmp_path / "run.prom"
    metrics.write(path)
    assert path.read_text(encoding="utf-8") == text


def test_prometheus_metrics_use_separate_registries():
    first = PrometheusRunMetrics()
    second = PrometheusRunMetrics()
    first.record(compute_row(make_config(), 2))

    assert first.registry.get_sample_value("proxbound_rows_total", {"outcome": "ok"}) == 1
    assert second.registry.get_sample_value("proxbound_rows_total", {"outcome": "ok"}) == 0
