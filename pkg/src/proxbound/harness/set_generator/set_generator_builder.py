"""
SetGenerator 实例的构建器。
"""

from typing import Any

from proxbound.common.builder import Builder

from .set_generator import SetGenerator


class SetGeneratorBuilder(Builder):
    """
    SetGenerator 实例的构建器。
    """

    @staticmethod
    def get_dependency_ids(name: str, config: dict[str, Any]) -> set[str]:
        dependency_ids: set[str] = set()

        match name:
            case "arithmetic" | "geometric" | "random-integer" | "symmetric" | "explicit-file":
                pass

        return dependency_ids

    @staticmethod
    def build(
        name: str, config: dict[str, Any], injections: dict[str, Any]
    ) -> SetGenerator:
        match name:
            case "arithmetic":
                from .arithmetic_set_generator import (
                    ArithmeticSetGenerator,
                    ArithmeticSetGeneratorParams,
                )

                return ArithmeticSetGenerator(ArithmeticSetGeneratorParams(**config))
            case "geometric":
                from .geometric_set_generator import (
                    GeometricSetGenerator,
                    GeometricSetGeneratorParams,
                )

                return GeometricSetGenerator(GeometricSetGeneratorParams(**config))
            case "random-integer":
                from .random_integer_set_generator import (
                    RandomIntegerSetGenerator,
                    RandomIntegerSetGeneratorParams,
                )

                return RandomIntegerSetGenerator(RandomIntegerSetGeneratorParams(**config))
            case "symmetric":
                from .symmetric_set_generator import (
                    SymmetricSetGenerator,
                    SymmetricSetGeneratorParams,
                )

                return SymmetricSetGenerator(SymmetricSetGeneratorParams(**config))
            case "explicit-file":
                from .explicit_set_generator import (
                    ExplicitSetGenerator,
                    ExplicitSetGeneratorParams,
                    read_values,
                )

                values = config.get("values")
                if values is None:
                    path = config.get("path")
                    if path is None:
                        raise ValueError("path must be provided for ExplicitSetGenerator")
                    values = read_values(path)

                return ExplicitSetGenerator(ExplicitSetGeneratorParams(values=values))
            case _:
                raise ValueError(f"Unknown SetGenerator name: {name}")
