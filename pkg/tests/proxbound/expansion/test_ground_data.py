from fractions import Fraction

import pytest

from proxbound.common.data_types import PreconditionError
from proxbound.exact_core import UniPoly
from proxbound.expansion import (
    GroundData,
    choose_t,
    eval_f,
    partition_consecutive,
    related,
)

CUBE = UniPoly.monomial(3)


@pytest.mark.parametrize(
    "a, b, c, phi, value",
    [
        (2, 1, 3, CUBE, 26),
        (1, 0, 0, CUBE, 2),
        (Fraction(1, 2), 0, Fraction(1, 8), CUBE, Fraction(1, 4)),
        (3, 3, 29, UniPoly.of([2, 0, 0, 1]), 0),
    ],
)
def test_eval_f(a, b, c, phi, value):
    assert eval_f(a, b, c, phi) == value


@pytest.mark.parametrize("a", [-2, 0, Fraction(5, 3), 7])
def test_eval_f_vanishes_on_the_graph(a):
    phi = UniPoly.of([1, -1, 0, 2])
    assert eval_f(a, a, phi(a), phi) == 0


@pytest.mark.parametrize(
    "n, d_size, s, t",
    [
        (100, 400, 10, 5),
        (4, 64, 100, 1),
        (9, 9, 1, 9),
        (16, 1, 1, 16),
        # q = 1.
        (4, 16, 2, 1),
        # q^2 = 27 / 12 = 9/4, q = 3/2 rounds half up to 2.
        (3, 3, 2, 2),
    ],
)
def test_choose_t(n, d_size, s, t):
    assert choose_t(n, d_size, s) == t


def test_choose_t_rejects_nonpositive():
    with pytest.raises(PreconditionError):
        choose_t(0, 1, 1)


@pytest.mark.parametrize(
    "n, t, sizes",
    [
        (10, 3, (4, 3, 3)),
        (6, 6, (1, 1, 1, 1, 1, 1)),
        (7, 2, (4, 3)),
        (5, 1, (5,)),
    ],
)
def test_partition_consecutive(n, t, sizes):
    segments = partition_consecutive(list(range(n)), t)
    assert segments.sizes == sizes
    assert segments.total == n
    assert max(sizes) - min(sizes) <= 1


@pytest.mark.parametrize("t", [0, 11])
def test_partition_consecutive_rejects(t):
    with pytest.raises(PreconditionError):
        partition_consecutive(list(range(10)), t)


def test_segment_lookup():
    segments = partition_consecutive(list(range(10)), 3)
    assert segments.starts == (0, 4, 7)
    assert [segments.segment_of(p) for p in (0, 3, 4, 6, 7, 9)] == [1, 1, 2, 2, 3, 3]
    assert list(segments.labels()) == [0, 0, 0, 0, 1, 1, 1, 2, 2, 2]


def test_related():
    elements = tuple(Fraction(x) for x in range(10))
    segments = partition_consecutive(elements, 3)
    assert not related(2, 2, elements, segments)
    assert related(0, 3, elements, segments)
    assert not related(3, 4, elements, segments)
    with pytest.raises(PreconditionError):
        related(Fraction(1, 2), 1, elements, segments)


def test_ground_data():
    g = GroundData.of([0, 1, 2, 3], ["1/2", 1, 2, 5], [-1, 0, 1, 2], CUBE, s=3, t=2)
    assert g.n == 4
    assert g.segments.sizes == (2, 2)
    assert g.segment("b", 2) == (Fraction(2), Fraction(5))
    assert g.related("a", 0, 1)
    assert not g.related("a", 1, 2)
    assert g.with_t(4).segments.sizes == (1, 1, 1, 1)
    assert g.with_s(9).s == 9


@pytest.mark.parametrize(
    "a, b, c",
    [
        ([1, 0], [0, 1], [0, 1]),
        ([0, 0], [0, 1], [0, 1]),
        ([0, 1], [0, 1, 2], [0, 1]),
        ([], [], []),
    ],
)
def test_ground_data_rejects(a, b, c):
    with pytest.raises(PreconditionError):
        GroundData.of(a, b, c, CUBE)


def test_ground_data_rejects_t_above_n():
    with pytest.raises(PreconditionError):
        GroundData.of([0, 1], [0, 1], [0, 1], CUBE, t=3)
