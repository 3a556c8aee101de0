"""
Data types for the proximity curve family and its incidence accounting.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from proxbound.exact_core import BiPoly, Point2, format_scalar
from proxbound.geometry import Isometry


@dataclass(frozen=True, kw_only=True)
class CurveParams:
    """
    A parameter tuple ((b, c), (b', c')) with b ~ b' and c ~ c'.

    Attributes:
        b, c, b_prime, c_prime (Fraction):
            The parameters.
        j, k (int):
            1-based segments of B and C holding (b, b') and (c, c').
    """

    b: Fraction
    c: Fraction
    b_prime: Fraction
    c_prime: Fraction
    j: int = 0
    k: int = 0

    @property
    def key(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.b, self.c, self.b_prime, self.c_prime)

    @property
    def is_diagonal(self) -> bool:
        return self.b == self.b_prime and self.c == self.c_prime

    def swapped(self) -> "CurveParams":
        return CurveParams(
            b=self.b_prime,
            c=self.c_prime,
            b_prime=self.b,
            c_prime=self.c,
            j=self.j,
            k=self.k,
        )

    def as_strings(self) -> list[str]:
        return [format_scalar(v) for v in self.key]


@dataclass(frozen=True, kw_only=True)
class CurveRecord:
    """
    A member of the family with its canonical polynomial in (x, x').
    """

    params: CurveParams
    poly: BiPoly


@dataclass(frozen=True, kw_only=True)
class ComponentClass:
    """
    All parameter tuples whose curve contains a common component.

    Attributes:
        component (BiPoly):
            Canonical nonconstant common divisor of every member's polynomial.
        members (tuple[CurveParams, ...]):
            The tuples, in family order.
    """

    component: BiPoly
    members: tuple[CurveParams, ...]

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True, kw_only=True)
class Gamma0Prediction:
    """
    Component of (x, x') induced by a symmetry R of the graph of phi,
    realized by the tuples with (b', c') = R(b, c).
    """

    component: BiPoly
    isometry: Isometry

    def predicts(self, params: CurveParams) -> bool:
        image = self.isometry.apply(Point2(params.b, params.c))
        return image == Point2(params.b_prime, params.c_prime)


@dataclass(frozen=True, kw_only=True)
class MultiplicityReport:
    """
    Shared-component classes of a curve family.

    Attributes:
        classes (tuple[ComponentClass, ...]):
            Every class with at least two members.
        exceptional (tuple[ComponentClass, ...]):
            Classes with at least five members; their components form Gamma_0.
        residual (tuple[BiPoly, ...]):
            Gamma minus Gamma_0: the distinct member polynomials after
            dividing out every exceptional component, constants dropped.
        predictions (tuple[Gamma0Prediction, ...]):
            Symmetry-induced components expected in Gamma_0.
        unpredicted (tuple[BiPoly, ...]):
            Exceptional components with no matching prediction.
        missed (tuple[BiPoly, ...]):
            Predicted components realized by at least five tuples
            but not found exceptional.
        deg_phi (int):
            Degree of phi.
    """

    classes: tuple[ComponentClass, ...]
    exceptional: tuple[ComponentClass, ...]
    residual: tuple[BiPoly, ...]
    predictions: tuple[Gamma0Prediction, ...] = ()
    unpredicted: tuple[BiPoly, ...] = ()
    missed: tuple[BiPoly, ...] = ()
    deg_phi: int = 0
    gamma0_hat: frozenset[tuple[Fraction, Fraction, Fraction, Fraction]] = field(
        default=frozenset(), repr=False
    )

    @property
    def gamma0(self) -> tuple[BiPoly, ...]:
        return tuple(cls.component for cls in self.exceptional)

    @property
    def max_residual_class_size(self) -> int:
        return max(
            (len(cls) for cls in self.classes if cls not in self.exceptional),
            default=0,
        )

    @property
    def cross_check_ok(self) -> bool:
        return not self.unpredicted and not self.missed

    def to_dict(self) -> dict[str, Any]:
        return {
            "classes": len(self.classes),
            "gamma0": [p.format() for p in self.gamma0],
            "gamma0_size": len(self.gamma0),
            "gamma0_hat_size": len(self.gamma0_hat),
            "exceptional_sizes": [len(cls) for cls in self.exceptional],
            "max_residual_class_size": self.max_residual_class_size,
            "residual_curves": len(self.residual),
            "predicted": [p.component.format() for p in self.predictions],
            "unpredicted": [p.format() for p in self.unpredicted],
            "missed": [p.format() for p in self.missed],
        }


@dataclass(frozen=True, kw_only=True)
class PointSetP:
    """
    Ordered pairs (a, a') with a ~ a' (and a = a' when diagonal is set).
    """

    pairs: tuple[tuple[Fraction, Fraction], ...]
    diagonal: bool = False

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


@dataclass(frozen=True, kw_only=True)
class IncidenceCount:
    """
    I(P, curves) with the per-curve breakdown, aligned with the curve list.
    """

    total: int
    per_curve: tuple[int, ...]


@dataclass(frozen=True, kw_only=True)
class UpperAccountingReport:
    """
    The decomposition |Q| = Q over Gamma_0-hat + residual Q and its bounds.

    Attributes:
        q_count (int):
            |Q| from the counting engine (strict, or relaxed without identical pairs).
        q_from_curves (int):
            The same count recovered as incidences of P with every tuple's curve.
        q_exceptional (int), exceptional_bound (int), exceptional_holds (bool):
            The Gamma_0-hat part against 4 deg(phi) n^3.
        q_residual (int), residual_incidences (int), residual_holds (bool):
            The rest against 4 I(P, Gamma minus Gamma_0).
        family_size, point_count, gamma0_size, residual_curves (int):
            |Gamma-hat|, |P|, |Gamma_0|, |Gamma minus Gamma_0|.
        sz_term1, sz_term2 (float), s_dim (int):
            Incidence bound for m = |P|, n = |Gamma minus Gamma_0|.
        cross_check_ok (bool):
            Exceptional components agree with the symmetry prediction.
    """

    mode: str
    q_count: int
    q_from_curves: int
    q_exceptional: int
    exceptional_bound: int
    exceptional_holds: bool
    q_residual: int
    residual_incidences: int
    residual_holds: bool
    family_size: int
    point_count: int
    gamma0_size: int
    residual_curves: int
    max_residual_class_size: int
    s_dim: int
    sz_term1: float
    sz_term2: float
    cross_check_ok: bool

    @property
    def all_hold(self) -> bool:
        return (
            self.exceptional_holds
            and self.residual_holds
            and self.q_count == self.q_from_curves
            and self.cross_check_ok
        )

    def to_dict(self) -> dict[str, Any]:
        return dict(self.__dict__)
