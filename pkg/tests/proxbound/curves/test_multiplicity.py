import time
from itertools import combinations

import pytest

from proxbound.curves import (
    EXCEPTIONAL_CLASS_SIZE,
    build_family,
    multiplicity_classes,
    predict_gamma0,
    shared_component,
)
from proxbound.exact_core import BiPoly, UniPoly
from proxbound.expansion import GroundData
from proxbound.harness import generate_sets

CUBE = UniPoly.monomial(3)
DIAGONAL = BiPoly.linear(1, -1)
ANTIDIAGONAL = BiPoly.linear(1, 1)


@pytest.mark.parametrize(
    "phi, components",
    [
        (CUBE, {DIAGONAL, ANTIDIAGONAL}),
        (UniPoly.of([0, 0, 0, 0, 1]), {DIAGONAL, ANTIDIAGONAL}),
        (UniPoly.of([0, 1, 0, 0, 1]), {DIAGONAL}),
        (UniPoly.of([0, 0, 1, 1]), {DIAGONAL, BiPoly.linear(3, 3, 2)}),
    ],
)
def test_predict_gamma0(phi, components):
    assert {p.component for p in predict_gamma0(phi)} == components


@pytest.fixture
def symmetric_instance():
    elements = range(-2, 3)
    return GroundData.of(elements, elements, elements, CUBE)


def test_symmetric_relaxed_family(symmetric_instance):
    family = build_family(symmetric_instance, include_diagonal=True)
    report = multiplicity_classes(family, CUBE)

    assert set(report.gamma0) == {DIAGONAL, ANTIDIAGONAL}
    assert [len(cls) for cls in report.exceptional] == [25, 25]
    assert report.cross_check_ok
    assert report.max_residual_class_size < EXCEPTIONAL_CLASS_SIZE

    by_component = {cls.component: cls for cls in report.exceptional}
    assert all(member.is_diagonal for member in by_component[DIAGONAL].members)
    assert all(
        (member.b_prime, member.c_prime) == (-member.b, -member.c)
        for member in by_component[ANTIDIAGONAL].members
    )
    assert len(report.gamma0_hat) == 49


def test_symmetric_strict_family(symmetric_instance):
    report = multiplicity_classes(build_family(symmetric_instance), CUBE)

    assert report.gamma0 == (ANTIDIAGONAL,)
    assert len(report.exceptional[0]) == 16
    assert report.to_dict()["gamma0"] == ["x + x'"]


def test_asymmetric_graph():
    phi = UniPoly.of([0, 1, 0, 0, 1])
    g = GroundData.of(range(4), range(4), range(4), phi)
    report = multiplicity_classes(build_family(g, include_diagonal=True), phi)

    assert report.gamma0 == (DIAGONAL,)
    assert report.cross_check_ok
    assert report.max_residual_class_size < EXCEPTIONAL_CLASS_SIZE


def test_residual_family_is_free_of_gamma0(symmetric_instance):
    family = build_family(symmetric_instance, include_diagonal=True)
    report = multiplicity_classes(family, CUBE)

    assert report.residual
    assert len(set(report.residual)) == len(report.residual)
    for poly in report.residual:
        assert not poly.is_constant()
        assert not any(component.divides(poly) for component in report.gamma0)


def test_classes_divide_their_members():
    g = GroundData.of(range(1, 5), range(1, 5), range(1, 5), CUBE, t=2)
    family = build_family(g, include_diagonal=True)
    polys = {record.params.key: record.poly for record in family}
    report = multiplicity_classes(family, CUBE)

    for cls in report.classes:
        assert len(cls) >= 2
        for member in cls.members:
            assert cls.component.divides(polys[member.key])
    assert len(report.gamma0) <= 4 * CUBE.degree


def test_classes_cover_every_shared_pair():
    g = GroundData.of(range(3), range(3), range(3), CUBE, t=2)
    family = build_family(g, include_diagonal=True)
    report = multiplicity_classes(family, CUBE)
    class_keys = [{member.key for member in cls.members} for cls in report.classes]

    for first, second in combinations(family, 2):
        if shared_component(first, second) is not None:
            assert any(
                {first.params.key, second.params.key} <= keys for keys in class_keys
            )


def test_generic_random_instance():
    g = generate_sets("random-integer", 16, 3, phi=CUBE, t=4)
    report = multiplicity_classes(build_family(g, include_diagonal=True), CUBE)

    assert report.gamma0 == (DIAGONAL,)
    assert len(report.exceptional[0]) == 16 * 16
    assert report.max_residual_class_size <= 4
    assert report.cross_check_ok


def test_symmetric_generator_strict_family():
    g = generate_sets("symmetric", 8, 0, phi=CUBE, t=1)
    report = multiplicity_classes(build_family(g), CUBE)

    assert report.gamma0 == (ANTIDIAGONAL,)
    assert len(report.exceptional[0]) == 64
    assert report.max_residual_class_size <= 4
    assert report.cross_check_ok


@pytest.mark.integration
@pytest.mark.parametrize("relaxed, gamma0", [(True, (DIAGONAL,)), (False, ())])
def test_symmetric_instance_with_two_segments(relaxed, gamma0):
    # Each segment holds one sign, so no tuple pairs b with -b.
    g = generate_sets("symmetric", 16, 0, phi=CUBE, t=2)

    started = time.perf_counter()
    report = multiplicity_classes(build_family(g, include_diagonal=relaxed), CUBE)
    assert time.perf_counter() - started < 60

    assert report.gamma0 == gamma0
    assert len(report.gamma0_hat) == (256 if relaxed else 0)
    assert report.max_residual_class_size <= 4
