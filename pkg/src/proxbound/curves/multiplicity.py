"""
Shared components of the curve family and the exceptional family Gamma_0.

Every member is a separated polynomial U(x) - V(x') with U, V of degree
2d and equal leading coefficient, so its top form is a multiple of
x^(2d) - x'^(2d). The member meets the line at infinity transversally in
the 2d directions x' = w x with w^(2d) = 1, and each of those points lies
on exactly one component. Two members therefore share a component
exactly when they share the branch through one of these points, and the
branch is the series x' = w x + e_0 + e_1 / x + ... .

Branch expansions are computed modulo a prime p = 1 (mod 2d), for all
members and directions at once, truncated after a fixed order. Members
with equal truncated expansions are candidate pairs; a candidate pair
must also pass the top-form condition (|dc| = |dc'|, or dc = dc' = 0 and
|db| = |db'|) and is then settled by gcd. Reduction modulo p maps equal
expansions to equal keys, so no shared component is missed.

Discovered components are kept pairwise coprime and divided out of every
member that contains them, so each later gcd can only reveal a new
component.
"""

import logging
from collections import defaultdict
from collections.abc import Callable, Sequence
from fractions import Fraction

import numpy as np
from sympy import nextprime
from sympy.ntheory import primitive_root

from proxbound.common.data_types import CheckFailure, PreconditionError
from proxbound.exact_core import BiPoly, UniPoly, bipoly_gcd, primitive_part
from proxbound.geometry import graph_symmetries, symmetry_center

from .data_types import (
    ComponentClass,
    CurveParams,
    CurveRecord,
    Gamma0Prediction,
    MultiplicityReport,
)

logger = logging.getLogger(__name__)

EXCEPTIONAL_CLASS_SIZE = 5

# Below 2^31, so products of residues fit in int64.
_BRANCH_PRIME_START = 1_000_000_000

BranchKey = tuple[int, ...]


def predict_gamma0(phi: UniPoly) -> list[Gamma0Prediction]:
    """
    Components forced by the symmetries of the graph of phi.

    The identity yields x - x'; a half-turn about (c0, phi(c0)) or the
    reflection in x = c0 yields x + x' - 2 c0. Tuples realize the
    component exactly when (b', c') = R(b, c).
    """
    predictions = []
    for r in graph_symmetries(phi):
        if r.is_identity():
            component = BiPoly.linear(1, -1)
        else:
            component = primitive_part(BiPoly.linear(1, 1, -2 * symmetry_center(phi)))
        predictions.append(Gamma0Prediction(component=component, isometry=r))
    return predictions


def _separated_degree(polys: Sequence[BiPoly]) -> int:
    degree = polys[0].degree_in(0)
    for poly in polys:
        separated = all(i == 0 or j == 0 for i, j in poly.terms)
        if (
            not separated
            or poly.degree_in(0) != degree
            or poly.degree_in(1) != degree
            or poly.coefficient((degree, 0)) != -poly.coefficient((0, degree))
        ):
            raise PreconditionError(
                f"Expected U(x) - V(x') with equal leading terms of degree {degree}, got {poly}"
            )
    return degree


def _branch_prime(polys: Sequence[BiPoly], degree: int) -> int:
    """
    A prime p = 1 (mod degree) dividing no denominator and no leading coefficient.
    """
    prime = nextprime(_BRANCH_PRIME_START)
    while True:
        if (prime - 1) % degree == 0 and all(
            poly.coefficient((degree, 0)).numerator % prime != 0
            and all(c.denominator % prime != 0 for c in poly.terms.values())
            for poly in polys
        ):
            return int(prime)
        prime = nextprime(prime)


def _truncated_product(
    left: list[np.ndarray], right: list[np.ndarray], order: int, prime: int
) -> list[np.ndarray]:
    product = []
    for k in range(order + 1):
        total = np.zeros_like(left[0])
        for j in range(k + 1):
            total = (total + left[j] * right[k - j] % prime) % prime
        product.append(total)
    return product


class _BranchExpansions:
    """
    Branches at infinity of separated polynomials, modulo a prime.
    """

    def __init__(self, polys: Sequence[BiPoly]):
        self.degree = _separated_degree(polys)
        self.prime = _branch_prime(polys, self.degree)
        self.order = self.degree + 2
        generator = pow(primitive_root(self.prime), (self.prime - 1) // self.degree, self.prime)
        self.roots = [pow(generator, k, self.prime) for k in range(self.degree)]

    def _reduce(self, value: Fraction) -> int:
        return value.numerator * pow(value.denominator, -1, self.prime) % self.prime

    def keys(self, polys: Sequence[BiPoly]) -> list[tuple[BranchKey, ...]]:
        """
        Per member, the truncated expansion (w, e_0, e_1, ...) in each direction.

        With t = 1/x and Y = x' t = w + e_0 t + e_1 t^2 + ..., the member
        equation V(x') = U(x) times t^(2d) reads
        sum v_i Y^i t^(2d-i) = sum u_i t^(2d-i), and the coefficient of t^m
        is linear in the m-th coefficient of Y with slope 2d w^(2d-1).
        """
        prime, degree = self.prime, self.degree
        count = len(polys)
        u = np.zeros((degree + 1, count), dtype=np.int64)
        v = np.zeros((degree + 1, count), dtype=np.int64)
        for index, poly in enumerate(polys):
            scale = pow(self._reduce(poly.coefficient((degree, 0))), -1, prime)
            for (i, j), c in poly.terms.items():
                value = self._reduce(c) * scale % prime
                if j == 0:
                    u[i, index] = value
                else:
                    v[j, index] = -value % prime

        roots = np.array(self.roots, dtype=np.int64)
        slopes = np.array(
            [pow(degree * pow(w, degree - 1, prime), -1, prime) for w in self.roots],
            dtype=np.int64,
        )
        series = [np.broadcast_to(roots, (count, degree)).copy()]
        for m in range(1, self.order + 1):
            series.append(np.zeros((count, degree), dtype=np.int64))
            horner = [np.ones((count, degree), dtype=np.int64)] + [
                np.zeros((count, degree), dtype=np.int64) for _ in range(m)
            ]
            for i in range(degree - 1, -1, -1):
                horner = _truncated_product(horner, series, m, prime)
                if degree - i <= m:
                    horner[degree - i] = (horner[degree - i] + v[i][:, None]) % prime
            target = u[degree - m][:, None] if m <= degree else 0
            series[m] = (target - horner[m]) % prime * slopes % prime

        stacked = np.stack(series, axis=-1).tolist()
        return [tuple(tuple(row) for row in member) for member in stacked]

    def directions(self, component: BiPoly) -> list[int]:
        """
        Directions k with w_k on the top form of a component.
        """
        total = component.total_degree
        lead = component.coefficient((0, total))
        if lead == 0:
            raise CheckFailure(
                "Component does not meet the line at infinity transversally",
                {"component": component.format()},
            )
        top = [
            (j, self._reduce(c / lead))
            for (i, j), c in component.terms.items()
            if i + j == total
        ]
        found = [
            k
            for k, w in enumerate(self.roots)
            if sum(c * pow(w, j, self.prime) for j, c in top) % self.prime == 0
        ]
        if len(found) != total:
            raise CheckFailure(
                "Component directions at infinity do not match its degree",
                {"component": component.format(), "directions": found},
            )
        return found


def _may_share(p: CurveParams, q: CurveParams) -> bool:
    dc, dc_prime = p.c - q.c, p.c_prime - q.c_prime
    if dc != 0 or dc_prime != 0:
        return abs(dc) == abs(dc_prime)
    return abs(p.b - q.b) == abs(p.b_prime - q.b_prime)


class _ComponentFinder:
    """
    Coprime components of a list of members, with their members.
    """

    def __init__(self, polys: Sequence[BiPoly]):
        self._residual = list(polys)
        self._components: dict[BiPoly, set[int]] = {}
        self._settled: set[tuple[int, int]] = set()
        self._by_key: dict[BranchKey, set[int]] = defaultdict(set)
        self.gcd_calls = 0
        if len(polys) < 2:
            self._keys: list[tuple[BranchKey, ...]] = [() for _ in polys]
            return
        self._branches = _BranchExpansions(polys)
        self._keys = self._branches.keys(polys)
        for index, keys in enumerate(self._keys):
            for key in keys:
                self._by_key[key].add(index)

    @property
    def components(self) -> dict[BiPoly, set[int]]:
        return self._components

    def run(self, may_share: Callable[[int, int], bool]) -> None:
        while self._find_next(may_share):
            pass

    def _find_next(self, may_share: Callable[[int, int], bool]) -> bool:
        shared = sorted(key for key, members in self._by_key.items() if len(members) > 1)
        for key in shared:
            indices = sorted(self._by_key[key])
            for position, first in enumerate(indices):
                for second in indices[position + 1 :]:
                    if (first, second) in self._settled:
                        continue
                    if not may_share(first, second):
                        self._settled.add((first, second))
                        continue
                    self.gcd_calls += 1
                    common = bipoly_gcd(self._residual[first], self._residual[second])
                    if common.is_constant():
                        self._settled.add((first, second))
                        continue
                    self._absorb(common, first)
                    return True
        return False

    def _strip(self, index: int, component: BiPoly, directions: Sequence[int]) -> bool:
        residual = self._residual[index]
        divided = False
        while not residual.is_constant():
            quotient, remainder = divmod(residual, component)
            if not remainder.is_zero():
                break
            residual = quotient
            divided = True
        if divided:
            self._residual[index] = residual if residual.is_constant() else primitive_part(residual)
            for k in directions:
                self._by_key[self._keys[index][k]].discard(index)
        return divided

    def _absorb(self, found: BiPoly, reference: int) -> None:
        """
        Record found and its coprime refinements, stripping them from every member.

        The reference member contains found, so its branches in the
        directions of any divisor of found identify that divisor.
        """
        pending: list[tuple[BiPoly, set[int]]] = [(found, set())]
        while pending:
            component, members = pending.pop()
            directions = self._branches.directions(component)
            candidates = sorted(
                set().union(
                    *(self._by_key.get(self._keys[reference][k], ()) for k in directions)
                )
            )
            split: BiPoly | None = None
            for index in candidates:
                if self._strip(index, component, directions):
                    members.add(index)
                    continue
                part = bipoly_gcd(self._residual[index], component)
                if not part.is_constant():
                    split = part
                    break
            if split is None:
                self._components.setdefault(component, set()).update(members)
                continue
            # Only part of the component lies on this member: refine into coprime pieces.
            rest = primitive_part(component.exact_quotient(split))
            logger.debug("Splitting component %s at %s", component, split)
            pending.append((rest, set(members)))
            pending.append((split, set(members)))


def multiplicity_classes(
    family: Sequence[CurveRecord],
    phi: UniPoly,
) -> MultiplicityReport:
    """
    Group the family by shared components.

    Args:
        family (Sequence[CurveRecord]):
            Members of Gamma-hat, as built by build_family.
        phi (UniPoly):
            The polynomial of the instance, deg phi >= 3.

    Returns:
        MultiplicityReport:
            One class per component shared by two or more members; classes
            with at least five members form Gamma_0, checked against the
            symmetry prediction.

    Raises:
        CheckFailure:
            If |Gamma_0| exceeds 4 deg(phi), a residual class exceeds four
            members, or a component fails to divide a member.
    """
    predictions = predict_gamma0(phi)
    params = [record.params for record in family]
    polys = [record.poly for record in family]

    finder = _ComponentFinder(polys)
    finder.run(lambda first, second: _may_share(params[first], params[second]))

    classes = []
    for component, members in finder.components.items():
        if len(members) < 2:
            continue
        ordered = sorted(members)
        for index in ordered:
            if not component.divides(polys[index]):
                raise CheckFailure(
                    "Recorded component does not divide a member",
                    {"component": component.format(), "member": params[index].as_strings()},
                )
        classes.append(
            ComponentClass(component=component, members=tuple(params[i] for i in ordered))
        )
    classes.sort(key=lambda cls: (-len(cls), cls.component.format()))

    exceptional = tuple(cls for cls in classes if len(cls) >= EXCEPTIONAL_CLASS_SIZE)
    if len(exceptional) > 4 * phi.degree:
        raise CheckFailure(
            "Gamma_0 exceeds 4 deg(phi) components",
            {"gamma0": [cls.component.format() for cls in exceptional], "deg_phi": phi.degree},
        )
    # A component outside the symmetry prediction may lie on at most four members.
    predicted = {prediction.component for prediction in predictions}
    unpredicted = tuple(cls.component for cls in exceptional if cls.component not in predicted)
    if unpredicted:
        oversized = next(cls for cls in exceptional if cls.component in unpredicted)
        raise CheckFailure(
            "Residual class with more than four members",
            {
                "component": oversized.component.format(),
                "size": len(oversized),
                "members": [member.as_strings() for member in oversized.members[:8]],
            },
        )

    gamma0_hat = frozenset(member.key for cls in exceptional for member in cls.members)
    residual = _residual_family(polys, params, exceptional, gamma0_hat)

    found = {cls.component for cls in exceptional}
    missed = tuple(
        prediction.component
        for prediction in predictions
        if prediction.component not in found
        and sum(prediction.predicts(p) for p in params) >= EXCEPTIONAL_CLASS_SIZE
    )
    if missed:
        logger.warning(
            "Predicted components not found exceptional: %s", [p.format() for p in missed]
        )

    logger.info(
        "%d members, %d shared classes, |Gamma_0| = %d, |Gamma minus Gamma_0| = %d (%d gcds)",
        len(family),
        len(classes),
        len(exceptional),
        len(residual),
        finder.gcd_calls,
    )
    return MultiplicityReport(
        classes=tuple(classes),
        exceptional=exceptional,
        residual=residual,
        predictions=tuple(predictions),
        unpredicted=unpredicted,
        missed=missed,
        deg_phi=phi.degree,
        gamma0_hat=gamma0_hat,
    )


def _residual_family(
    polys: Sequence[BiPoly],
    params: Sequence[CurveParams],
    exceptional: Sequence[ComponentClass],
    gamma0_hat: frozenset,
) -> tuple[BiPoly, ...]:
    """
    Member polynomials with every exceptional component divided out,
    deduplicated in family order; constant quotients are dropped.
    """
    components = [cls.component for cls in exceptional]
    residual: dict[BiPoly, None] = {}
    for poly, p in zip(polys, params):
        if p.key in gamma0_hat:
            for component in components:
                while not poly.is_constant():
                    quotient, remainder = divmod(poly, component)
                    if not remainder.is_zero():
                        break
                    poly = quotient
            if poly.is_constant():
                continue
            poly = primitive_part(poly)
        residual.setdefault(poly, None)
    return tuple(residual)
