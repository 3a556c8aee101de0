"""
Sparse bivariate polynomials over the rationals.

A BiPoly maps exponent pairs (i, j) to the coefficient of x^i * x'^j.
The same type carries curve equations in (x, x') and conic equations
in (x, y); only the printed variable names differ.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from types import MappingProxyType

from proxbound.common.data_types import PreconditionError

from .scalar import ScalarLike, format_scalar, to_scalar
from .uni_poly import UniPoly

Monomial = tuple[int, int]


class BiPoly:
    """
    Immutable sparse polynomial in two variables.

    Monomials are ordered lexicographically with the first variable
    dominating, so the leading monomial is the largest exponent pair.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, ScalarLike] | None = None):
        self._terms: dict[Monomial, Fraction] = {}
        for monomial, value in (terms or {}).items():
            coefficient = to_scalar(value)
            if coefficient != 0:
                self._terms[monomial] = coefficient
        self._hash: int | None = None

    @classmethod
    def constant(cls, value: ScalarLike) -> BiPoly:
        return cls({(0, 0): value})

    @classmethod
    def first(cls) -> BiPoly:
        return cls({(1, 0): 1})

    @classmethod
    def second(cls) -> BiPoly:
        return cls({(0, 1): 1})

    @classmethod
    def linear(cls, a: ScalarLike, b: ScalarLike, c: ScalarLike = 0) -> BiPoly:
        """
        a*x + b*x' + c
        """
        return cls({(1, 0): a, (0, 1): b, (0, 0): c})

    @classmethod
    def from_uni(cls, p: UniPoly, variable: int = 0) -> BiPoly:
        """
        Lift p into the first (variable=0) or second (variable=1) variable.
        """
        if variable == 0:
            return cls({(k, 0): c for k, c in enumerate(p.coefficients)})
        return cls({(0, k): c for k, c in enumerate(p.coefficients)})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(sorted(self._terms.items(), reverse=True))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(monomial == (0, 0) for monomial in self._terms)

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self._terms), default=-1)

    def degree_in(self, variable: int) -> int:
        return max((monomial[variable] for monomial in self._terms), default=-1)

    @property
    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise PreconditionError("The zero polynomial has no leading monomial")
        return max(self._terms)

    @property
    def leading_coefficient(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        return self._terms[self.leading_monomial]

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self._terms.get(monomial, Fraction(0))

    def homogeneous_part(self, degree: int) -> BiPoly:
        return BiPoly({m: c for m, c in self._terms.items() if sum(m) == degree})

    def evaluate(self, x: ScalarLike, y: ScalarLike) -> Fraction:
        x = to_scalar(x)
        y = to_scalar(y)
        return sum(
            (c * x**i * y**j for (i, j), c in self._terms.items()),
            Fraction(0),
        )

    def swap(self) -> BiPoly:
        """
        Exchange the two variables.
        """
        return BiPoly({(j, i): c for (i, j), c in self._terms.items()})

    def scale(self, factor: ScalarLike) -> BiPoly:
        factor = to_scalar(factor)
        return BiPoly({m: c * factor for m, c in self._terms.items()})

    def __neg__(self) -> BiPoly:
        return self.scale(-1)

    def __add__(self, other: BiPoly | ScalarLike) -> BiPoly:
        other = _as_bipoly(other)
        terms = dict(self._terms)
        for monomial, c in other._terms.items():
            terms[monomial] = terms.get(monomial, Fraction(0)) + c
        return BiPoly(terms)

    __radd__ = __add__

    def __sub__(self, other: BiPoly | ScalarLike) -> BiPoly:
        return self + (-_as_bipoly(other))

    def __rsub__(self, other: ScalarLike) -> BiPoly:
        return _as_bipoly(other) - self

    def __mul__(self, other: BiPoly | ScalarLike) -> BiPoly:
        other = _as_bipoly(other)
        terms: dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                monomial = (i1 + i2, j1 + j2)
                terms[monomial] = terms.get(monomial, Fraction(0)) + c1 * c2
        return BiPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> BiPoly:
        if exponent < 0:
            raise PreconditionError("Negative polynomial power")
        result = BiPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, divisor: BiPoly) -> tuple[BiPoly, BiPoly]:
        """
        Multivariate division by the lex leading term of the divisor.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead_i, lead_j = divisor.leading_monomial
        lead_c = divisor.leading_coefficient
        quotient: dict[Monomial, Fraction] = {}
        remainder: dict[Monomial, Fraction] = {}
        rest = dict(self._terms)
        while rest:
            top = max(rest)
            top_c = rest[top]
            if top[0] >= lead_i and top[1] >= lead_j:
                shift = (top[0] - lead_i, top[1] - lead_j)
                factor = top_c / lead_c
                quotient[shift] = quotient.get(shift, Fraction(0)) + factor
                for (i, j), c in divisor._terms.items():
                    monomial = (i + shift[0], j + shift[1])
                    value = rest.get(monomial, Fraction(0)) - factor * c
                    if value == 0:
                        rest.pop(monomial, None)
                    else:
                        rest[monomial] = value
            else:
                remainder[top] = top_c
                del rest[top]
        return BiPoly(quotient), BiPoly(remainder)

    def exact_quotient(self, divisor: BiPoly) -> BiPoly:
        quotient, remainder = divmod(self, divisor)
        if not remainder.is_zero():
            raise PreconditionError(f"{divisor} does not divide {self}")
        return quotient

    def divides(self, other: BiPoly) -> bool:
        """
        True when self divides other exactly.
        """
        if self.is_zero():
            return other.is_zero()
        return divmod(other, self)[1].is_zero()

    def to_recursive(self) -> list[UniPoly]:
        """
        View self as a polynomial in the second variable with
        coefficients in Q[first]; index j holds the coefficient of x'^j.
        """
        size = self.degree_in(1) + 1
        columns: list[dict[int, Fraction]] = [{} for _ in range(size)]
        for (i, j), c in self._terms.items():
            columns[j][i] = c
        return [
            UniPoly(tuple(column.get(i, Fraction(0)) for i in range(max(column, default=-1) + 1)))
            for column in columns
        ]

    @classmethod
    def from_recursive(cls, columns: Iterable[UniPoly]) -> BiPoly:
        terms: dict[Monomial, Fraction] = {}
        for j, column in enumerate(columns):
            for i, c in enumerate(column.coefficients):
                if c != 0:
                    terms[(i, j)] = c
        return cls(terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == BiPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def format(self, names: tuple[str, str] = ("x", "x'")) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for (i, j), c in self:
            factors = [
                name if k == 1 else f"{name}^{k}"
                for name, k in zip(names, (i, j))
                if k > 0
            ]
            magnitude = abs(c)
            if not factors:
                body = format_scalar(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([format_scalar(magnitude), *factors])
            parts.append(f"{'-' if c < 0 else '+'} {body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"BiPoly({self.format()!r})"


def _as_bipoly(value: BiPoly | ScalarLike) -> BiPoly:
    if isinstance(value, BiPoly):
        return value
    return BiPoly.constant(value)
