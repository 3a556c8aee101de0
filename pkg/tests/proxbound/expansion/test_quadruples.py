import random
from fractions import Fraction

import pytest

from proxbound.exact_core import UniPoly
from proxbound.expansion import GroundData, QuadrupleMode, count_Q, eval_f, level_sets

CUBE = UniPoly.monomial(3)
PHIS = [CUBE, UniPoly.of([0, 0, 1, 1]), UniPoly.of([0, 1, 0, 0, 1])]


def brute_force_Q(g: GroundData) -> tuple[int, int]:
    """
    Ordered (strict, relaxed) counts by comparing every pair of triples.
    """
    segment = {
        name: {x: g.segments.segment_of(p) for p, x in enumerate(getattr(g, name))}
        for name in "abc"
    }
    triples = [
        ((a, b, c), eval_f(a, b, c, g.phi), (segment["a"][a], segment["b"][b], segment["c"][c]))
        for a in g.a
        for b in g.b
        for c in g.c
    ]
    strict, relaxed = 0, 0
    for first, value, box in triples:
        for second, other_value, other_box in triples:
            if first == second or value != other_value or box != other_box:
                continue
            relaxed += 1
            if all(x != y for x, y in zip(first, second)):
                strict += 1
    return strict, relaxed


def random_instance(seed: int) -> GroundData:
    rng = random.Random(seed)
    n = rng.randint(1, 8)

    def elements():
        values: set[Fraction] = set()
        while len(values) < n:
            values.add(Fraction(rng.randint(-4, 4), rng.choice([1, 2])))
        return sorted(values)

    if seed % 2:
        a = b = c = list(range(n))
    else:
        a, b, c = elements(), elements(), elements()
    return GroundData.of(a, b, c, PHIS[seed % 3], t=rng.randint(1, n))


@pytest.fixture
def unit_instance():
    return GroundData.of([0, 1], [0, 1], [0, 1], CUBE)


def test_worked_example(unit_instance):
    stats = count_Q(unit_instance)
    assert stats.mode is QuadrupleMode.STRICT
    assert stats.strict_ordered == 8
    assert stats.relaxed_ordered == 16
    assert stats.count == 8
    assert stats.strict_unordered == 4
    assert stats.relaxed_unordered == 8


def test_relaxed_mode(unit_instance):
    stats = count_Q(unit_instance, "relaxed")
    assert stats.strict_ordered is None
    assert stats.count == 16


def test_singleton_segments(unit_instance):
    stats = count_Q(unit_instance.with_t(2))
    assert (stats.strict_ordered, stats.relaxed_ordered) == (0, 0)


def test_reuses_level_sets(unit_instance):
    levels = level_sets(unit_instance)
    assert count_Q(unit_instance, levels=levels) == count_Q(unit_instance)


def test_table(unit_instance):
    stats = count_Q(unit_instance, with_table=True)
    assert stats.table is not None
    assert int(stats.table.relaxed_pairs.sum()) == 16
    assert int(stats.table.strict_pairs.sum()) == 8


@pytest.mark.parametrize("seed", range(30))
def test_matches_brute_force(seed):
    g = random_instance(seed)
    strict, relaxed = brute_force_Q(g)

    stats = count_Q(g)
    assert (stats.strict_ordered, stats.relaxed_ordered) == (strict, relaxed)
    assert count_Q(g, QuadrupleMode.RELAXED).relaxed_ordered == relaxed
    assert strict % 2 == 0 and relaxed % 2 == 0


def test_coarsening_nested_partitions_never_decreases():
    g = GroundData.of(range(8), range(8), range(8), CUBE)
    counts = [count_Q(g.with_t(t)) for t in (8, 4, 2, 1)]
    for finer, coarser in zip(counts, counts[1:]):
        assert coarser.strict_ordered >= finer.strict_ordered
        assert coarser.relaxed_ordered >= finer.relaxed_ordered
    assert counts[0].relaxed_ordered == 0
