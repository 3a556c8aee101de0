import pytest

from proxbound.common.data_types import PreconditionError
from proxbound.harness import ExperimentRow, fit_exponent, fit_points


@pytest.mark.parametrize("exponent", [1, 2, 3])
def test_exact_power_law(exponent):
    fit = fit_points([(n, 5 * n**exponent) for n in (2, 4, 8, 16, 32)])
    assert fit.slope == pytest.approx(exponent)
    assert fit.intercept == pytest.approx(1.6094379124341003)
    assert all(abs(r) < 1e-9 for r in fit.residuals)


def test_residuals_follow_input_order():
    fit = fit_points([(4, 16), (2, 4), (8, 80)])
    assert len(fit.residuals) == 3
    assert sum(fit.residuals) == pytest.approx(0)
    assert fit.residuals[2] > 0


@pytest.mark.parametrize(
    "points",
    [
        [(4, 10)],
        [(4, 10), (4, 12)],
        [(4, 10), (8, 0)],
        [],
    ],
)
def test_rejects(points):
    with pytest.raises(PreconditionError):
        fit_points(points)


def test_fit_exponent_skips_missing_rows():
    rows = [
        ExperimentRow(n=2, image_size=8),
        ExperimentRow(n=3, error="GuardrailError: too large"),
        ExperimentRow(n=4, image_size=64),
    ]
    assert fit_exponent(rows).slope == pytest.approx(3)
