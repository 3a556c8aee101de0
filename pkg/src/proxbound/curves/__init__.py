from .data_types import (
    ComponentClass,
    CurveParams,
    CurveRecord,
    Gamma0Prediction,
    IncidenceCount,
    MultiplicityReport,
    PointSetP,
    UpperAccountingReport,
)
from .family import build_family, curve_poly, shared_component
from .incidences import incidences, point_set_P
from .multiplicity import EXCEPTIONAL_CLASS_SIZE, multiplicity_classes, predict_gamma0
from .upper_accounting import verify_upper_accounting

__all__ = [
    "EXCEPTIONAL_CLASS_SIZE",
    "ComponentClass",
    "CurveParams",
    "CurveRecord",
    "Gamma0Prediction",
    "IncidenceCount",
    "MultiplicityReport",
    "PointSetP",
    "UpperAccountingReport",
    "build_family",
    "curve_poly",
    "incidences",
    "multiplicity_classes",
    "point_set_P",
    "predict_gamma0",
    "shared_component",
    "verify_upper_accounting",
]
