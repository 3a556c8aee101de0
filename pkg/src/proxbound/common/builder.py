"""
按名称和配置构建组件的构建器抽象基类。
"""

from abc import ABC, abstractmethod
from typing import Any


class Builder(ABC):
    """
    按名称和配置构建组件的构建器抽象基类。
    """

    @staticmethod
    @abstractmethod
    def get_dependency_ids(name: str, config: dict[str, Any]) -> set[str]:
        """
        获取构建该组件所需注入的依赖ID集合。

        参数:
            name (str):
                要构建的组件名称。
            config (dict[str, Any]):
                组件的配置字典。

        返回:
            set[str]:
                构建该组件所需的依赖ID集合。
        """
        raise NotImplementedError

    @staticmethod
    @abstractmethod
    def build(name: str, config: dict[str, Any], injections: dict[str, Any]) -> Any:
        """
        基于组件名称、配置和注入的依赖构建组件。

        参数:
            name (str):
                要构建的组件名称。
            config (dict[str, Any]):
                组件的配置字典。
            injections (dict[str, Any]):
                注入的依赖项字典，键为依赖ID，值为对应的实例。
        """
        raise NotImplementedError
