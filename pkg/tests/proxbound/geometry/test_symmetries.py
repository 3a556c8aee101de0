import random
from fractions import Fraction

import pytest

from proxbound.common.data_types import PreconditionError
from proxbound.exact_core import Point2, UniPoly
from proxbound.geometry import Isometry, fixes_graph, graph_symmetries, symmetry_center


@pytest.mark.parametrize(
    "coefficients, expected",
    [
        ([0, 0, 0, 1], [Isometry.identity(), Isometry.half_turn(Point2.of(0, 0))]),
        (
            [0, 0, 1, 1],
            [
                Isometry.identity(),
                Isometry.half_turn(Point2.of(Fraction(-1, 3), Fraction(2, 27))),
            ],
        ),
        ([0, 1, 0, 0, 1], [Isometry.identity()]),
        ([0, 0, 0, 0, 1], [Isometry.identity(), Isometry.vertical_reflection(0)]),
        ([1, -4, 6, -4, 1], [Isometry.identity(), Isometry.vertical_reflection(1)]),
    ],
)
def test_graph_symmetries(coefficients, expected):
    phi = UniPoly.of(coefficients)
    assert graph_symmetries(phi) == expected


def test_rejects_low_degree():
    with pytest.raises(PreconditionError):
        graph_symmetries(UniPoly.of([0, 0, 1]))


def random_cubic(rng: random.Random) -> UniPoly:
    lead = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4))
    return UniPoly.of([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3)] + [lead])


@pytest.mark.parametrize("seed", range(50))
def test_every_cubic_has_its_inflection_half_turn(seed):
    phi = random_cubic(random.Random(seed))
    symmetries = graph_symmetries(phi)

    c = symmetry_center(phi)
    assert symmetries == [Isometry.identity(), Isometry.half_turn(Point2(c, phi(c)))]
    # The inflection point is where phi'' vanishes.
    assert 6 * phi.coefficient(3) * c + 2 * phi.coefficient(2) == 0


@pytest.mark.parametrize(
    "coefficients",
    [[0, 0, 0, 1], [0, 1, 0, 0, 1], [0, 0, 0, 0, 1], [2, 0, -1, 0, 0, 3]],
)
def test_symmetries_form_a_group(coefficients):
    phi = UniPoly.of(coefficients)
    symmetries = graph_symmetries(phi)

    assert symmetries[0].is_identity()
    assert len(symmetries) <= 4 * phi.degree
    for r in symmetries:
        assert fixes_graph(r, phi)
        assert r.inverse() in symmetries
        for s in symmetries:
            assert r.compose(s) in symmetries


@pytest.mark.parametrize(
    "r",
    [
        Isometry.rotation(Fraction(3, 5), Fraction(4, 5)),
        Isometry.rotation(0, 1, Point2.of(1, 1)),
        Isometry.translation_by(Point2.of(1, 0)),
        Isometry.translation_by(Point2.of(0, 1)),
        Isometry.reflection(1, 0),
        Isometry.reflection(Fraction(5, 13), Fraction(12, 13)),
        Isometry.vertical_reflection(0).compose(Isometry.translation_by(Point2.of(0, 2))),
    ],
)
def test_candidates_outside_the_families_never_fix_a_cubic(r):
    phi = UniPoly.of([0, 0, 0, 1])
    assert not fixes_graph(r, phi)

    # Sample check on 2 deg(phi) + 1 graph points.
    images = [r.apply(Point2.of(x, phi(x))) for x in range(-3, 4)]
    assert not all(q.y == phi(q.x) for q in images)
