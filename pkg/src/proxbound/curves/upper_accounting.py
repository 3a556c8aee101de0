"""
Upper-bound accounting for Q.

A pair of triples ((a, b, c), (a', b', c')) lies in Q exactly when
(a, a') is a point of P and ((b, c), (b', c')) is a tuple of Gamma-hat
whose curve passes through it. Summing the incidences of P with every
tuple's curve therefore recovers |Q|, and splitting that sum by
membership in Gamma_0-hat gives the two parts being bounded.
"""

import logging

from proxbound.common.data_types import CheckFailure
from proxbound.expansion import GroundData, LevelSets, QuadrupleMode, count_Q, sz_bound

from .data_types import UpperAccountingReport
from .family import build_family
from .incidences import incidences, point_set_P
from .multiplicity import multiplicity_classes

logger = logging.getLogger(__name__)


def verify_upper_accounting(
    g: GroundData,
    mode: QuadrupleMode | str = QuadrupleMode.STRICT,
    s_dim: int = 4,
    eps: float = 0.0,
    levels: LevelSets | None = None,
) -> UpperAccountingReport:
    """
    Check |Q| <= 4 I(P, Gamma minus Gamma_0) + 4 deg(phi) n^3 piece by piece.

    Args:
        g (GroundData):
            The instance; deg phi >= 3.
        mode (QuadrupleMode | str):
            "strict" works with Gamma-hat as defined; "relaxed" admits
            b = b', c = c' and a = a', so that x - x' enters Gamma_0.
            Relaxed counts exclude pairs of identical triples.
        s_dim (int):
            Family dimension for the incidence bound.
        eps (float):
            Exponent slack for the incidence bound.
        levels (LevelSets | None):
            Level sets of g, reused for the |Q| count.

    Returns:
        UpperAccountingReport:
            Every quantity and the outcome of each inequality.
    """
    mode = QuadrupleMode(mode)
    relaxed = mode is QuadrupleMode.RELAXED

    family = build_family(g, include_diagonal=relaxed)
    report = multiplicity_classes(family, g.phi)
    points = point_set_P(g, include_diagonal=relaxed)
    per_tuple = incidences(points, family).per_curve

    q_from_curves, q_exceptional = 0, 0
    for record, count in zip(family, per_tuple):
        if relaxed and record.params.is_diagonal:
            # The n points (a, a) lie on x - x' and pair each triple with itself.
            count -= g.n
        q_from_curves += count
        if record.params.key in report.gamma0_hat:
            q_exceptional += count
    q_residual = q_from_curves - q_exceptional

    q_count = count_Q(g, mode, levels=levels).count
    if q_count != q_from_curves:
        raise CheckFailure(
            "Curve incidences do not reproduce |Q|",
            {"n": g.n, "t": g.t, "q_count": q_count, "q_from_curves": q_from_curves},
        )

    residual_incidences = incidences(points, report.residual).total
    exceptional_bound = 4 * g.phi.degree * g.n**3
    bound = sz_bound(len(points), len(report.residual), s_dim, eps)

    result = UpperAccountingReport(
        mode=mode.value,
        q_count=q_count,
        q_from_curves=q_from_curves,
        q_exceptional=q_exceptional,
        exceptional_bound=exceptional_bound,
        exceptional_holds=q_exceptional <= exceptional_bound,
        q_residual=q_residual,
        residual_incidences=residual_incidences,
        residual_holds=q_residual <= 4 * residual_incidences,
        family_size=len(family),
        point_count=len(points),
        gamma0_size=len(report.gamma0),
        residual_curves=len(report.residual),
        max_residual_class_size=report.max_residual_class_size,
        s_dim=s_dim,
        sz_term1=bound.term1,
        sz_term2=bound.term2,
        cross_check_ok=report.cross_check_ok,
    )
    logger.info(
        "Accounting n=%d t=%d (%s): |Q| = %d = %d exceptional + %d residual, I = %d",
        g.n,
        g.t,
        mode.value,
        q_count,
        q_exceptional,
        q_residual,
        residual_incidences,
    )
    return result
