"""
Dense univariate polynomials over the rationals.

UniPoly houses phi and serves as the coefficient ring Q[x]
when bivariate polynomials are viewed as polynomials in x'.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from proxbound.common.data_types import PreconditionError

from .scalar import ScalarLike, format_scalar, to_scalar


@dataclass(frozen=True)
class UniPoly:
    """
    Polynomial sum(coefficients[k] * x**k).

    Trailing zero coefficients are stripped at construction,
    so the zero polynomial has no coefficients and degree -1.
    """

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self):
        coefficients = [to_scalar(c) for c in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @classmethod
    def of(cls, coefficients: Iterable[ScalarLike]) -> UniPoly:
        return cls(tuple(to_scalar(c) for c in coefficients))

    @classmethod
    def constant(cls, value: ScalarLike) -> UniPoly:
        return cls((to_scalar(value),))

    @classmethod
    def monomial(cls, degree: int, coefficient: ScalarLike = 1) -> UniPoly:
        return cls((Fraction(0),) * degree + (to_scalar(coefficient),))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.coefficients:
            return Fraction(0)
        return self.coefficients[-1]

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return Fraction(0)

    def __call__(self, x: ScalarLike) -> Fraction:
        return poly_eval(self, to_scalar(x))

    def __neg__(self) -> UniPoly:
        return UniPoly(tuple(-c for c in self.coefficients))

    def __add__(self, other: UniPoly | ScalarLike) -> UniPoly:
        other = _as_poly(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return UniPoly(
            tuple(self.coefficient(k) + other.coefficient(k) for k in range(size))
        )

    __radd__ = __add__

    def __sub__(self, other: UniPoly | ScalarLike) -> UniPoly:
        return self + (-_as_poly(other))

    def __rsub__(self, other: ScalarLike) -> UniPoly:
        return _as_poly(other) - self

    def __mul__(self, other: UniPoly | ScalarLike) -> UniPoly:
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return UniPoly(tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> UniPoly:
        if exponent < 0:
            raise PreconditionError("Negative polynomial power")
        result = UniPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coefficients)
        quotient = [Fraction(0)] * max(len(remainder) - other.degree, 0)
        lead = other.leading_coefficient
        for shift in range(len(quotient) - 1, -1, -1):
            factor = remainder[shift + other.degree] / lead
            quotient[shift] = factor
            if factor == 0:
                continue
            for k, c in enumerate(other.coefficients):
                remainder[shift + k] -= factor * c
        return UniPoly(tuple(quotient)), UniPoly(tuple(remainder))

    def exact_quotient(self, other: UniPoly) -> UniPoly:
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero():
            raise PreconditionError(f"{other} does not divide {self}")
        return quotient

    def compose(self, inner: UniPoly) -> UniPoly:
        """
        Return self(inner(x)) by Horner's scheme over polynomials.
        """
        result = UniPoly()
        for c in reversed(self.coefficients):
            result = result * inner + c
        return result

    def monic(self) -> UniPoly:
        if self.is_zero():
            return self
        return UniPoly(tuple(c / self.leading_coefficient for c in self.coefficients))

    def format(self, variable: str = "x") -> str:
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if k == 0:
                body = format_scalar(magnitude)
            else:
                power = variable if k == 1 else f"{variable}^{k}"
                body = power if magnitude == 1 else f"{format_scalar(magnitude)}*{power}"
            parts.append(f"{sign} {body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __str__(self) -> str:
        return self.format()


def _as_poly(value: UniPoly | ScalarLike) -> UniPoly:
    if isinstance(value, UniPoly):
        return value
    return UniPoly.constant(value)


def poly_eval(p: UniPoly, x: Fraction) -> Fraction:
    """
    Evaluate p at x exactly with Horner's rule.
    """
    result = Fraction(0)
    for c in reversed(p.coefficients):
        result = result * x + c
    return result


def poly_compose_affine(p: UniPoly, a: ScalarLike, b: ScalarLike) -> UniPoly:
    """
    Expand q(x) = p(a*x + b).

    The coefficient of x^k is sum over m >= k of p_m * C(m, k) * a^k * b^(m-k).
    """
    a = to_scalar(a)
    b = to_scalar(b)
    size = len(p.coefficients)
    expanded = [Fraction(0)] * size
    for m, c in enumerate(p.coefficients):
        if c == 0:
            continue
        for k in range(m + 1):
            expanded[k] += c * comb(m, k) * a**k * b ** (m - k)
    return UniPoly(tuple(expanded))


def uni_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """
    Monic gcd in Q[x] by the Euclidean algorithm; gcd(0, 0) = 0.
    """
    while not q.is_zero():
        p, q = q, divmod(p, q)[1]
    return p.monic()
