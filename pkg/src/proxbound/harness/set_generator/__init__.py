from .set_generator import SetGenerator
from .set_generator_builder import SetGeneratorBuilder

__all__ = [
    "SetGenerator",
    "SetGeneratorBuilder",
]
