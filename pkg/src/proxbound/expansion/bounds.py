"""
Closed-form bounds, evaluated in floating point for reporting only.

Leading constants are taken to be 1 throughout.
"""

from fractions import Fraction

from proxbound.common.data_types import PreconditionError

from .data_types import SzBound


def szemeredi_trotter_bound(m: int, n_curves: int) -> float:
    """
    m^(2/3) n^(2/3) + m + n.
    """
    return float(m) ** (2 / 3) * float(n_curves) ** (2 / 3) + m + n_curves


def sz_bound(m: int, n_curves: int, s_dim: int, eps: float = 0.0) -> SzBound:
    """
    Incidence bound for m points and n curves from an s-dimensional family.

    Args:
        m (int):
            Number of points.
        n_curves (int):
            Number of curves.
        s_dim (int):
            Dimension of the curve family, at least 2.
        eps (float):
            Nonnegative exponent slack.

    Returns:
        SzBound:
            m^(2s/(5s-4)) n^((5s-6)/(5s-4)+eps) and m^(2/3) n^(2/3) + m + n.
    """
    if s_dim < 2:
        raise PreconditionError(f"s_dim must be at least 2, got {s_dim}")
    if eps < 0:
        raise PreconditionError(f"eps must be nonnegative, got {eps}")
    denominator = 5 * s_dim - 4
    term1 = float(m) ** (2 * s_dim / denominator) * float(n_curves) ** (
        (5 * s_dim - 6) / denominator + eps
    )
    return SzBound(term1=term1, term2=szemeredi_trotter_bound(m, n_curves))


def upper_q_estimate(n: int, d_size: int, s: int, eps: float = 0.0) -> float:
    """
    (s^2 n |D|)^(9/8 + eps), the incidence estimate for |Q| without the
    exceptional term.
    """
    return float(s * s * n * d_size) ** (9 / 8 + eps)


def expansion_exponent(eps: float = 0.0) -> float:
    """
    Growth exponent of |D| implied by s n^3 <= (n |D|)^(9/8 + eps) + O(n^3):
    3 / (9/8 + eps) - 1, which is 5/3 at eps = 0.
    """
    return 3 / (9 / 8 + eps) - 1


def implied_image_floor(n: int, s: int, deg_phi: int, eps: float = 0.0) -> float | None:
    """
    Smallest |D| compatible with s n^3 <= (n |D|)^(9/8 + eps) + 4 deg(phi) n^3.

    None when s <= 4 deg(phi), where the inequality says nothing.
    """
    excess = Fraction(s - 4 * deg_phi)
    if excess <= 0:
        return None
    return float(excess * n**3) ** (1 / (9 / 8 + eps)) / n
