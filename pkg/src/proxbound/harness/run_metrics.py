"""
实验运行指标：每行的结果类别与耗时。
"""

import logging
from abc import ABC, abstractmethod
from pathlib import Path

from prometheus_client import (
    CollectorRegistry,
    Counter,
    Histogram,
    generate_latest,
    write_to_textfile,
)

from .data_types import ExperimentRow

logger = logging.getLogger(__name__)

OUTCOMES = ("ok", "failed_check", "error")


def row_outcome(row: ExperimentRow) -> str:
    """
    行的结果类别：ok、failed_check 或 error。
    """
    if row.error is None:
        return "ok"
    if row.failed_check:
        return "failed_check"
    return "error"


class RunMetrics(ABC):
    """
    记录实验运行指标的接口。
    """

    @abstractmethod
    def record(self, row: ExperimentRow) -> None:
        """
        记录一行已完成的结果。

        Args:
            row (ExperimentRow):
                已计算完成的行。
        """
        raise NotImplementedError


class PrometheusRunMetrics(RunMetrics):
    """
    基于 prometheus_client 的 RunMetrics 实现。

    指标注册在独立的 CollectorRegistry 上，
    同一进程内可以创建多个实例。
    """

    def __init__(self, registry: CollectorRegistry | None = None):
        self._registry = registry if registry is not None else CollectorRegistry()
        self._rows = Counter(
            "proxbound_rows",
            "Experiment rows computed, by outcome",
            labelnames=("outcome",),
            registry=self._registry,
        )
        for outcome in OUTCOMES:
            self._rows.labels(outcome=outcome)
        self._row_seconds = Histogram(
            "proxbound_row_seconds",
            "Wall time per experiment row",
            registry=self._registry,
        )

    @property
    def registry(self) -> CollectorRegistry:
        return self._registry

    def record(self, row: ExperimentRow) -> None:
        self._rows.labels(outcome=row_outcome(row)).inc()
        if row.wall_time_approx is not None:
            self._row_seconds.observe(row.wall_time_approx)

    def exposition(self) -> str:
        """
        Prometheus 文本格式的当前指标。
        """
        return generate_latest(self._registry).decode("utf-8")

    def write(self, path: str | Path) -> None:
        """
        以 textfile collector 格式写出指标。
        """
        write_to_textfile(str(path), self._registry)
        logger.info("Wrote run metrics to %s", path)
