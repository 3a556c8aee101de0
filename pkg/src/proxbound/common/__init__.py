from .builder import Builder
from .data_types import (
    CheckFailure,
    GuardrailError,
    IrrationalNormalizerError,
    PreconditionError,
    ProxboundError,
)

__all__ = [
    "Builder",
    "CheckFailure",
    "GuardrailError",
    "IrrationalNormalizerError",
    "PreconditionError",
    "ProxboundError",
]
