from .bi_poly import BiPoly, Monomial
from .gcd import bipoly_gcd, primitive_part, shares_component
from .linear import Matrix2, Point2
from .scalar import (
    Scalar,
    ScalarLike,
    denominator_lcm,
    format_scalar,
    parse_scalar,
    rational_sqrt,
    to_scalar,
)
from .uni_poly import UniPoly, poly_compose_affine, poly_eval, uni_gcd

__all__ = [
    "BiPoly",
    "Matrix2",
    "Monomial",
    "Point2",
    "Scalar",
    "ScalarLike",
    "UniPoly",
    "bipoly_gcd",
    "denominator_lcm",
    "format_scalar",
    "parse_scalar",
    "poly_compose_affine",
    "poly_eval",
    "primitive_part",
    "rational_sqrt",
    "shares_component",
    "to_scalar",
    "uni_gcd",
]
