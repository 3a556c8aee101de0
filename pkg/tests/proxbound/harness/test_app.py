import json

import pytest

from proxbound.common.data_types import CheckFailure
from proxbound.harness import CSV_COLUMNS, read_rows
from proxbound.harness.app import EXIT_CHECK_FAILED, EXIT_USAGE, build_parser, run

EXAMPLE = ["--n", "2", "--param", "start=0"]


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "sweep.cfg"
    path.write_text(
        "phi = [0, 0, 0, 1]\nn = [2, 3]\ngenerator.start = 0\nt = 1\n",
        encoding="utf-8",
    )
    return path


def output_json(capsys):
    return json.loads(capsys.readouterr().out)


def test_image(capsys):
    assert run(["image", *EXAMPLE, "--dump"]) == 0
    assert output_json(capsys) == {"n": 2, "image_size": 3, "values": ["0", "1", "2"]}


def test_quadruples(capsys):
    assert run(["quadruples", *EXAMPLE, "--t", "1"]) == 0
    result = output_json(capsys)
    assert (result["strict_ordered"], result["relaxed_ordered"]) == (8, 16)
    assert result["lower_chain"]["heavy_holds"] is True
    assert result["s"] == 25


def test_quadruples_relaxed_without_chain(capsys):
    assert run(["quadruples", *EXAMPLE, "--t", "1", "--mode", "relaxed", "--no-chain"]) == 0
    result = output_json(capsys)
    assert result["strict_ordered"] is None
    assert result["relaxed_ordered"] == 16
    assert "lower_chain" not in result


def test_dichotomy(capsys):
    code = run(
        ["dichotomy", "--p", "0", "0", "1", "0", "0", "1", "--p-prime", "1", "1", "2", "1", "1", "2"]
    )
    assert code == 0
    assert output_json(capsys)["outcome"] == "congruent"


def test_symmetries(capsys):
    assert run(["symmetries", "--phi", "[0, 0, 0, 1]"]) == 0
    kinds = {r["kind"] for r in output_json(capsys)}
    assert kinds == {"identity", "half-turn"}


def test_family(capsys):
    assert run(["family", "--n", "3", "--param", "start=0", "--t", "1", "--accounting"]) == 0
    result = output_json(capsys)
    assert result["family_size"] == 36
    assert result["accounting"]["q_count"] == result["accounting"]["q_from_curves"]


@pytest.mark.parametrize(
    "argv",
    [
        ["image", "--n", "2", "--phi", "[0, 0, 1]"],
        ["image", "--n", "2", "--param", "start"],
        ["image", "--n", "2", "--param", "step=0"],
        ["quadruples", "--n", "2000"],
        ["family", "--n", "65"],
        ["dichotomy", "--p", "0", "0", "0", "0", "1", "1", "--p-prime", "0", "0", "1", "0", "0", "1"],
        ["symmetries", "--phi", "[1, 1]"],
        ["fit", "missing-rows.csv"],
    ],
)
def test_usage_errors(argv, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert run(argv) == EXIT_USAGE


def test_check_failure(capsys, monkeypatch):
    def failing(*args, **kwargs):
        raise CheckFailure("Level sets do not partition the grid", {"n": 2, "total": 7})

    monkeypatch.setattr("proxbound.harness.app.level_sets", failing)
    assert run(["quadruples", *EXAMPLE]) == EXIT_CHECK_FAILED
    error = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert error["counterexample"] == {"n": 2, "total": 7}


def test_experiment_csv(capsys, config_file):
    assert run(["experiment", str(config_file)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 3


def test_experiment_from_environment(capsys, config_file, monkeypatch):
    monkeypatch.setenv("PROXBOUND_CONFIG", str(config_file))
    assert run(["experiment", "--json"]) == 0
    records = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert [record["n"] for record in records] == [2, 3]
    assert records[0]["q_strict"] == 8


def test_experiment_output_and_fit(capsys, config_file, tmp_path):
    output = tmp_path / "rows.csv"
    assert run(["experiment", str(config_file), "--output", str(output)]) == 0
    with open(output, encoding="utf-8") as stream:
        rows = read_rows(stream)
    assert [row.n for row in rows] == [2, 3]
    assert rows[0].image_size == 3

    capsys.readouterr()
    assert run(["fit", str(output)]) == 0
    assert len(output_json(capsys)["residuals"]) == 2


def test_experiment_failed_check(capsys, config_file, monkeypatch):
    def failing(*args, **kwargs):
        raise CheckFailure("Heavy values carry less than 9/10 of the grid")

    monkeypatch.setattr("proxbound.harness.experiment.verify_lower_chain", failing)
    assert run(["experiment", str(config_file)]) == EXIT_CHECK_FAILED


def test_experiment_writes_metrics(capsys, config_file, tmp_path):
    metrics = tmp_path / "run.prom"
    assert run(["experiment", str(config_file), "--metrics", str(metrics)]) == 0
    text = metrics.read_text(encoding="utf-8")
    assert 'proxbound_rows_total{outcome="ok"} 2.0' in text
    assert "proxbound_row_seconds_count 2.0" in text


def test_parser_requires_a_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])
