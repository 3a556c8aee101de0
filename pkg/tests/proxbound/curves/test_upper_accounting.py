import pytest

from proxbound.curves import verify_upper_accounting
from proxbound.exact_core import UniPoly
from proxbound.expansion import GroundData, QuadrupleMode, count_Q, level_sets

CUBE = UniPoly.monomial(3)


@pytest.fixture(
    params=[
        (range(1, 5), CUBE, 1),
        (range(-2, 3), CUBE, 1),
        (range(6), CUBE, 2),
        (range(4), UniPoly.of([0, 1, 0, 0, 1]), 1),
        (range(-3, 3), UniPoly.of([0, 0, 1, 1]), 2),
    ]
)
def instance(request):
    elements, phi, t = request.param
    return GroundData.of(elements, elements, elements, phi, t=t)


@pytest.mark.parametrize("mode", list(QuadrupleMode))
def test_accounting_holds(instance, mode):
    report = verify_upper_accounting(instance, mode)

    assert report.mode == mode.value
    assert report.q_count == count_Q(instance, mode).count
    assert report.q_count == report.q_from_curves
    assert report.q_exceptional + report.q_residual == report.q_count
    assert report.exceptional_bound == 4 * instance.phi.degree * instance.n**3
    assert report.exceptional_holds
    assert report.residual_holds
    assert report.max_residual_class_size <= 4
    assert report.all_hold


def test_relaxed_family_sizes():
    g = GroundData.of(range(4), range(4), range(4), CUBE, t=2)
    strict = verify_upper_accounting(g, "strict")
    relaxed = verify_upper_accounting(g, "relaxed", levels=level_sets(g))

    assert (strict.family_size, strict.point_count) == (16, 4)
    assert (relaxed.family_size, relaxed.point_count) == (64, 8)
    assert relaxed.gamma0_size >= 1


@pytest.mark.parametrize("mode", ["strict", "relaxed"])
def test_singleton_segments(mode):
    g = GroundData.of(range(4), range(4), range(4), CUBE, t=4)
    report = verify_upper_accounting(g, mode)

    assert report.q_count == 0
    assert report.q_from_curves == 0
    assert report.q_exceptional == 0
    assert report.all_hold


def test_to_dict():
    g = GroundData.of(range(3), range(3), range(3), CUBE)
    data = verify_upper_accounting(g, s_dim=3, eps=0.5).to_dict()
    assert data["s_dim"] == 3
    assert data["mode"] == "strict"
    assert isinstance(data["sz_term1"], float)
