"""
冻结的基准数据。

|D| 表：A = B = C = {1, ..., n}，phi = x^3，由 image_set 穷举得到。
下界链报告：同一构造在 n = 64、s = 40 时 verify_lower_chain 的全部字段。
两个文件都随仓库一起版本化，并记录生成方式。
"""

import argparse
import json
import logging
import os
from collections.abc import Iterable
from pathlib import Path
from typing import Any

from dotenv import load_dotenv

from proxbound.expansion import GroundData, choose_t, image_set, verify_lower_chain

from .fit import fit_points
from .instances import CUBE, generate_sets

logger = logging.getLogger(__name__)

GOLDEN_N = (16, 32, 64, 128, 256)
CHAIN_N = 64
CHAIN_S = 40

GOLDEN_PATH = Path(__file__).with_name("golden_image_sizes.json")
CHAIN_PATH = Path(__file__).with_name("golden_lower_chain.json")

_GENERATOR = "arithmetic"
_GENERATOR_PARAMS = {"start": 1, "step": 1}
_PROVENANCE = {
    "generator": _GENERATOR,
    "generator_params": {"start": "1", "step": "1"},
    "phi": ["0", "0", "0", "1"],
    "generated_by": "proxbound-freeze-golden",
}


def _instance(n: int, s: int = 1) -> GroundData:
    return generate_sets(_GENERATOR, n, 0, _GENERATOR_PARAMS, phi=CUBE, s=s)


def compute_golden(ns: Iterable[int] = GOLDEN_N) -> dict[int, int]:
    """
    穷举计算每个 n 的 |D|。
    """
    sizes: dict[int, int] = {}
    for n in ns:
        sizes[n] = len(image_set(_instance(n)))
        logger.info("n=%d: |D|=%d", n, sizes[n])
    return sizes


def golden_table(sizes: dict[int, int]) -> dict[str, Any]:
    fit = fit_points(sorted(sizes.items()))
    return {
        **_PROVENANCE,
        "method": "exhaustive image_set enumeration",
        "image_sizes": {str(n): size for n, size in sorted(sizes.items())},
        "slope": fit.slope,
    }


def compute_chain_report(n: int = CHAIN_N, s: int = CHAIN_S) -> dict[str, Any]:
    """
    计算下界链报告，t 由 choose_t 选取。

    Returns:
        dict[str, Any]:
            带生成方式说明的报告，report 字段为 LowerChainReport.to_dict()。
    """
    g = _instance(n, s)
    g = g.with_t(choose_t(n, len(image_set(g)), s))
    report = verify_lower_chain(g)
    logger.info("n=%d s=%d t=%d: final slack %s", n, s, g.t, report.final_slack)
    return {
        **_PROVENANCE,
        "method": "verify_lower_chain with t = choose_t(n, |D|, s)",
        "n": n,
        "s": s,
        "report": report.to_dict(),
    }


def _load(path: str | Path) -> dict[str, Any] | None:
    path = Path(path)
    if not path.exists():
        return None
    return json.loads(path.read_text(encoding="utf-8"))


def load_golden(path: str | Path = GOLDEN_PATH) -> dict[str, Any] | None:
    """
    读取 |D| 基准表；文件不存在时返回 None。
    """
    data = _load(path)
    if data is not None:
        data["image_sizes"] = {int(n): size for n, size in data["image_sizes"].items()}
    return data


def load_chain_report(path: str | Path = CHAIN_PATH) -> dict[str, Any] | None:
    """
    读取下界链基准报告；文件不存在时返回 None。
    """
    return _load(path)


def _write(path: str | Path, data: dict[str, Any]) -> None:
    Path(path).write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")


def main():
    """重新生成基准数据。"""
    log_level = os.getenv("LOG_LEVEL", "INFO").upper()
    log_format = os.getenv("LOG_FORMAT", "%(levelname)-7s %(message)s")
    logging.basicConfig(
        level=log_level,
        format=log_format,
    )
    load_dotenv()

    parser = argparse.ArgumentParser(
        prog="proxbound-freeze-golden",
        description="Regenerate the frozen |D| table and lower-chain report "
        "for A = B = C = {1..n}, phi = x^3",
    )
    parser.add_argument(
        "--output",
        default=str(GOLDEN_PATH),
        help="where to write the |D| table (default: the packaged table)",
    )
    parser.add_argument(
        "--chain-output",
        default=str(CHAIN_PATH),
        help="where to write the lower-chain report (default: the packaged report)",
    )
    parser.add_argument(
        "--n",
        type=int,
        nargs="+",
        default=list(GOLDEN_N),
        help="instance sizes",
    )
    args = parser.parse_args()

    table = golden_table(compute_golden(args.n))
    _write(args.output, table)
    logger.info("Wrote %s (slope %.12g)", args.output, table["slope"])

    _write(args.chain_output, compute_chain_report())
    logger.info("Wrote %s", args.chain_output)


if __name__ == "__main__":
    main()
