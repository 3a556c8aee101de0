from fractions import Fraction

import pytest

from proxbound.common.data_types import PreconditionError
from proxbound.harness.random_source import SplitMix64
from proxbound.harness.set_generator import SetGeneratorBuilder


def generate(name, config, n, seed=0):
    return SetGeneratorBuilder.build(name, config, {}).generate(n, SplitMix64(seed))


@pytest.mark.parametrize(
    "config, n, expected",
    [
        ({}, 3, (1, 2, 3)),
        ({"start": 0, "step": "1/2"}, 4, (0, Fraction(1, 2), 1, Fraction(3, 2))),
        ({"start": "0", "step": -1}, 3, (-2, -1, 0)),
    ],
)
def test_arithmetic(config, n, expected):
    assert generate("arithmetic", config, n) == expected


@pytest.mark.parametrize(
    "config, n, expected",
    [
        ({}, 4, (1, 2, 4, 8)),
        ({"ratio": "1/2"}, 4, (Fraction(1, 8), Fraction(1, 4), Fraction(1, 2), 1)),
        ({"first": -1, "ratio": 3}, 3, (-9, -3, -1)),
    ],
)
def test_geometric(config, n, expected):
    assert generate("geometric", config, n) == expected


@pytest.mark.parametrize(
    "name, config",
    [
        ("arithmetic", {"step": 0}),
        ("arithmetic", {"step": 0.5}),
        ("geometric", {"ratio": 1}),
        ("geometric", {"ratio": -2}),
        ("geometric", {"first": 0}),
        ("symmetric", {"step": 0}),
    ],
)
def test_invalid_params(name, config):
    with pytest.raises(ValueError):
        SetGeneratorBuilder.build(name, config, {})


@pytest.mark.parametrize("n", [1, 5, 10, 40])
def test_random_integer(n):
    values = generate("random-integer", {}, n, seed=7)
    assert len(values) == n
    assert list(values) == sorted(set(values))
    assert all(1 <= v <= 4 * n * n for v in values)
    assert all(v.denominator == 1 for v in values)


def test_random_integer_is_deterministic():
    config = {"low": -50, "high": 50}
    assert generate("random-integer", config, 20, seed=3) == generate(
        "random-integer", config, 20, seed=3
    )
    assert generate("random-integer", config, 20, seed=3) != generate(
        "random-integer", config, 20, seed=4
    )


def test_random_integer_full_range():
    assert generate("random-integer", {"low": 5, "high": 9}, 5) == (5, 6, 7, 8, 9)
    with pytest.raises(PreconditionError):
        generate("random-integer", {"low": 5, "high": 9}, 6)


@pytest.mark.parametrize(
    "config, n, expected",
    [
        ({}, 4, (-2, -1, 1, 2)),
        ({}, 5, (-2, -1, 0, 1, 2)),
        ({"step": "1/2"}, 2, (Fraction(-1, 2), Fraction(1, 2))),
        ({}, 1, (0,)),
    ],
)
def test_symmetric(config, n, expected):
    assert generate("symmetric", config, n) == expected


def test_explicit_values():
    assert generate("explicit-file", {"values": ["3", "1", "2/3"]}, 2) == (1, 3)
    assert generate("explicit-file", {"values": [3, 1, "2/3"]}, 3) == (Fraction(2, 3), 1, 3)


def test_explicit_file(tmp_path):
    path = tmp_path / "values.txt"
    path.write_text("1, 2  # first two\n5/2\n\n-1\n", encoding="utf-8")
    assert generate("explicit-file", {"path": str(path)}, 4) == (-1, 1, 2, Fraction(5, 2))


def test_explicit_rejects():
    with pytest.raises(ValueError):
        SetGeneratorBuilder.build("explicit-file", {"values": ["1", "1"]}, {})
    with pytest.raises(ValueError):
        SetGeneratorBuilder.build("explicit-file", {}, {})
    with pytest.raises(PreconditionError):
        generate("explicit-file", {"values": ["1", "2"]}, 3)


def test_unknown_generator():
    with pytest.raises(ValueError, match="Unknown SetGenerator name"):
        SetGeneratorBuilder.build("fibonacci", {}, {})
