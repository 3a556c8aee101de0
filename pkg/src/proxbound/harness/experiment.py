"""
端到端实验：对配置中的每个 n 生成实例、计数并核对两侧的界。
"""

import asyncio
import logging
import time
from typing import Any

from pydantic import BaseModel, Field, InstanceOf

from proxbound.common.data_types import CheckFailure, ProxboundError
from proxbound.curves import verify_upper_accounting
from proxbound.expansion import (
    GroundData,
    choose_t,
    count_Q,
    image_set,
    implied_image_floor,
    level_sets,
    verify_lower_chain,
)

from .config import ExperimentConfig
from .data_types import ExperimentResult, ExperimentRow, approx
from .instances import generate_sets
from .run_metrics import RunMetrics

logger = logging.getLogger(__name__)


def _pair_count(g: GroundData) -> int:
    return sum(size * (size - 1) for size in g.segments.sizes)


def compute_row(config: ExperimentConfig, n: int) -> ExperimentRow:
    """
    计算单个 n 的结果行。

    该行内的失败被记录在 error 列中，不会向外抛出：
    断言类检查失败以 "check:" 开头，其余为前置条件或规模限制错误。
    """
    started = time.perf_counter()
    values: dict[str, Any] = {"n": n}
    try:
        config.check_guardrails(n)
        phi = config.phi_poly
        assert config.s is not None
        g = generate_sets(
            config.generator,
            n,
            config.seed,
            config.generator_params,
            phi=phi,
            s=config.s,
            independent=config.independent_sets,
        )
        t = config.t if config.t is not None else choose_t(n, len(image_set(g)), config.s)
        g = g.with_t(t)
        levels = level_sets(g)

        pairs = _pair_count(g)
        values.update(
            image_size=len(levels.image),
            t=t,
            s=g.s,
            p_size=pairs,
            family_size=pairs * pairs,
            p_ratio_approx=approx(pairs * t / n**2),
            family_ratio_approx=approx(pairs * pairs * t * t / n**4),
            implied_image_floor_approx=approx(
                implied_image_floor(n, g.s, phi.degree, config.eps)
            ),
        )

        stats = count_Q(g, config.quadruples, levels=levels)
        values.update(q_strict=stats.strict_ordered, q_relaxed=stats.relaxed_ordered)

        if config.lower_chain:
            chain = verify_lower_chain(g, levels=levels)
            values.update(
                heavy_count=chain.heavy_count,
                heavy_slack=chain.heavy_slack,
                per_value_failed=chain.per_value_failed,
                fifth_holds=chain.fifth_holds,
                final_floor=chain.final_floor,
                final_slack=chain.final_slack,
                final_holds=chain.final_holds,
                max_occupied_ratio=chain.max_occupied_ratio,
            )

        if config.accounting:
            report = verify_upper_accounting(
                g, config.accounting_mode, config.s_dim, config.eps, levels=levels
            )
            values.update(
                gamma0_size=report.gamma0_size,
                q_exceptional=report.q_exceptional,
                q_residual=report.q_residual,
                incidences=report.residual_incidences,
                exceptional_holds=report.exceptional_holds,
                residual_holds=report.residual_holds,
                cross_check_ok=report.cross_check_ok,
                sz_bound_approx=approx(report.sz_term1 + report.sz_term2),
            )
    except CheckFailure as e:
        values["error"] = f"check: {e} {e.counterexample}"
        logger.warning("n=%d: check failed: %s", n, e)
    except ProxboundError as e:
        values["error"] = f"{type(e).__name__}: {e}"
        logger.warning("n=%d: skipped: %s", n, e)

    values["wall_time_approx"] = approx(time.perf_counter() - started)
    row = ExperimentRow(**values)
    logger.info(
        "n=%d: |D|=%s t=%s strict Q=%s relaxed Q=%s (%.2fs)",
        n,
        row.image_size,
        row.t,
        row.q_strict,
        row.q_relaxed,
        row.wall_time_approx,
    )
    return row


class ExperimentRunnerParams(BaseModel):
    """
    ExperimentRunner 的参数。

    Attributes:
        config (ExperimentConfig):
            实验配置。
        metrics (RunMetrics | None):
            记录每行结果类别与耗时的运行指标（默认值: None）。
    """

    config: ExperimentConfig = Field(..., description="Experiment configuration")
    metrics: InstanceOf[RunMetrics] | None = Field(
        None, description="Run metrics for row outcomes and timings"
    )


class ExperimentRunner:
    """
    并发计算各行，并按配置中的 n 的顺序返回结果。
    """

    def __init__(self, params: ExperimentRunnerParams):
        self._config = params.config
        self._metrics = params.metrics

    async def run(self) -> ExperimentResult:
        semaphore = asyncio.Semaphore(self._config.max_concurrency)

        async def run_row(n: int) -> ExperimentRow:
            async with semaphore:
                row = await asyncio.to_thread(compute_row, self._config, n)
            if self._metrics is not None:
                self._metrics.record(row)
            return row

        rows = await asyncio.gather(*(run_row(n) for n in self._config.n))
        return ExperimentResult(rows=tuple(rows))


def run_experiment(
    cfg: ExperimentConfig,
    metrics: RunMetrics | None = None,
) -> ExperimentResult:
    """
    同步运行整个实验。
    """
    runner = ExperimentRunner(ExperimentRunnerParams(config=cfg, metrics=metrics))
    return asyncio.run(runner.run())
