"""
proxbound 命令行入口。

退出码：0 表示成功，1 表示用法或前置条件错误，2 表示断言类检查失败。
"""

import argparse
import json
import logging
import os
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from dotenv import load_dotenv
from pydantic import ValidationError

from proxbound.common.data_types import CheckFailure, GuardrailError, PreconditionError
from proxbound.curves import build_family, multiplicity_classes, verify_upper_accounting
from proxbound.exact_core import Point2, format_scalar, parse_scalar
from proxbound.expansion import (
    GroundData,
    choose_t,
    count_Q,
    image_set,
    level_sets,
    verify_lower_chain,
)
from proxbound.geometry import TriplePair, graph_symmetries, sigma_dichotomy

from .config import MAX_ACCOUNTING_N, MAX_QUADRUPLE_N, load_config, parse_value, phi_from_text
from .experiment import run_experiment
from .fit import fit_exponent
from .instances import GENERATOR_KINDS, generate_sets
from .output import read_rows, render
from .run_metrics import PrometheusRunMetrics

logger = logging.getLogger(__name__)

EXIT_USAGE = 1
EXIT_CHECK_FAILED = 2


def _print_json(data: Any) -> None:
    print(json.dumps(data, indent=2, default=str))


def _generator_params(items: Sequence[str]) -> dict[str, Any]:
    params: dict[str, Any] = {}
    for item in items:
        key, separator, value = item.partition("=")
        if not separator or not key.strip():
            raise PreconditionError(f"Generator parameter must be key=value, got {item!r}")
        params[key.strip().lower()] = parse_value(value)
    return params


def _add_instance_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--phi", default="[0, 0, 0, 1]", help="coefficients, constant first")
    parser.add_argument("--generator", default="arithmetic", choices=GENERATOR_KINDS)
    parser.add_argument(
        "--param",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="generator parameter, may be repeated",
    )
    parser.add_argument("--n", type=int, required=True, help="size of each ground set")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--s", type=int, default=None, help="default 8 deg(phi) + 1")
    parser.add_argument("--independent", action="store_true", help="draw A, B, C separately")


def _add_partition_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--t", type=int, default=None, help="number of segments (default: choose_t)")
    parser.add_argument("--allow-large", action="store_true", help="lift the desk-scale limits")


def _instance(args: argparse.Namespace) -> GroundData:
    phi = phi_from_text(args.phi)
    if phi.degree < 3:
        raise PreconditionError(f"deg phi must be at least 3, got {phi.degree}")
    s = args.s if args.s is not None else 8 * phi.degree + 1
    return generate_sets(
        args.generator,
        args.n,
        args.seed,
        _generator_params(args.param),
        phi=phi,
        s=s,
        independent=args.independent,
    )


def _partitioned(args: argparse.Namespace, limit: int) -> GroundData:
    if args.n > limit and not args.allow_large:
        raise GuardrailError(f"n = {args.n} exceeds {limit}; pass --allow-large to proceed")
    g = _instance(args)
    t = args.t if args.t is not None else choose_t(g.n, len(image_set(g)), g.s)
    return g.with_t(t)


def _image(args: argparse.Namespace) -> int:
    g = _instance(args)
    image = image_set(g)
    result: dict[str, Any] = {"n": g.n, "image_size": len(image)}
    if args.dump:
        result["values"] = [format_scalar(d) for d in image]
    _print_json(result)
    return 0


def _quadruples(args: argparse.Namespace) -> int:
    g = _partitioned(args, MAX_QUADRUPLE_N)
    levels = level_sets(g)
    stats = count_Q(g, args.mode, levels=levels)
    result: dict[str, Any] = {
        "n": g.n,
        "t": g.t,
        "s": g.s,
        "image_size": len(levels.image),
        "strict_ordered": stats.strict_ordered,
        "relaxed_ordered": stats.relaxed_ordered,
    }
    exit_code = 0
    if not args.no_chain:
        chain = verify_lower_chain(g, levels=levels)
        result["lower_chain"] = chain.to_dict()
        if not chain.heavy_holds:
            exit_code = EXIT_CHECK_FAILED
    _print_json(result)
    return exit_code


def _point(values: Sequence[str], offset: int) -> Point2:
    return Point2.of(parse_scalar(values[offset]), parse_scalar(values[offset + 1]))


def _dichotomy(args: argparse.Namespace) -> int:
    p = tuple(_point(args.p, i) for i in (0, 2, 4))
    p_prime = tuple(_point(args.p_prime, i) for i in (0, 2, 4))
    outcome = sigma_dichotomy(TriplePair(p, p_prime))  # type: ignore[arg-type]
    _print_json(outcome.to_dict())
    return 0


def _symmetries(args: argparse.Namespace) -> int:
    phi = phi_from_text(args.phi)
    _print_json([r.to_dict() for r in graph_symmetries(phi)])
    return 0


def _family(args: argparse.Namespace) -> int:
    g = _partitioned(args, MAX_ACCOUNTING_N)
    relaxed = args.mode == "relaxed"
    family = build_family(g, include_diagonal=relaxed)
    report = multiplicity_classes(family, g.phi)
    result: dict[str, Any] = {
        "n": g.n,
        "t": g.t,
        "mode": args.mode,
        "family_size": len(family),
        "multiplicity": report.to_dict(),
    }
    exit_code = 0
    if args.accounting:
        accounting = verify_upper_accounting(g, args.mode, args.s_dim, args.eps)
        result["accounting"] = accounting.to_dict()
        if not accounting.all_hold:
            exit_code = EXIT_CHECK_FAILED
    _print_json(result)
    return exit_code


def _experiment(args: argparse.Namespace) -> int:
    config = load_config(args.config)
    overrides: dict[str, Any] = {}
    if args.output is not None:
        overrides["output"] = args.output
    if args.json:
        overrides["output_format"] = "json"
    if args.allow_large:
        overrides["allow_large"] = True
    if overrides:
        config = config.model_copy(update=overrides)

    metrics = PrometheusRunMetrics()
    result = run_experiment(config, metrics)
    if args.metrics is not None:
        metrics.write(args.metrics)

    text = render(result.rows, config.output_format)
    if config.output is None:
        sys.stdout.write(text)
    else:
        Path(config.output).write_text(text, encoding="utf-8")
        logger.info("Wrote %d rows to %s", len(result), config.output)
    return EXIT_CHECK_FAILED if result.failed_check else 0


def _fit(args: argparse.Namespace) -> int:
    if args.rows == "-":
        rows = read_rows(sys.stdin)
    else:
        try:
            with open(args.rows, encoding="utf-8") as stream:
                rows = read_rows(stream)
        except FileNotFoundError:
            raise PreconditionError(f"Rows file {args.rows} not found") from None
    fit = fit_exponent(rows)
    _print_json(
        {"slope": fit.slope, "intercept": fit.intercept, "residuals": list(fit.residuals)}
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="proxbound",
        description="Exact desk-scale checks of the proximity-quadruple expansion bound",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    image = subparsers.add_parser("image", help="size of the image set f(A, B, C)")
    _add_instance_arguments(image)
    image.add_argument("--dump", action="store_true", help="also print every value")
    image.set_defaults(handler=_image)

    quadruples = subparsers.add_parser("quadruples", help="count Q and report the lower chain")
    _add_instance_arguments(quadruples)
    _add_partition_arguments(quadruples)
    quadruples.add_argument("--mode", choices=("strict", "relaxed"), default="strict")
    quadruples.add_argument("--no-chain", action="store_true", help="skip the lower chain")
    quadruples.set_defaults(handler=_quadruples)

    dichotomy = subparsers.add_parser("dichotomy", help="classify a pair of point triples")
    dichotomy.add_argument(
        "--p", nargs=6, required=True, metavar="X", help="x1 y1 x2 y2 x3 y3 (distinct points)"
    )
    dichotomy.add_argument(
        "--p-prime", nargs=6, required=True, metavar="X", help="x1' y1' x2' y2' x3' y3'"
    )
    dichotomy.set_defaults(handler=_dichotomy)

    symmetries = subparsers.add_parser("symmetries", help="isometries fixing the graph of phi")
    symmetries.add_argument("--phi", required=True, help="coefficients, constant first")
    symmetries.set_defaults(handler=_symmetries)

    family = subparsers.add_parser("family", help="curve family, multiplicity classes and Gamma_0")
    _add_instance_arguments(family)
    _add_partition_arguments(family)
    family.add_argument("--mode", choices=("strict", "relaxed"), default="strict")
    family.add_argument("--accounting", action="store_true", help="run the upper accounting")
    family.add_argument("--s-dim", type=int, default=4)
    family.add_argument("--eps", type=float, default=0.0)
    family.set_defaults(handler=_family)

    experiment = subparsers.add_parser("experiment", help="run the full pipeline from a config file")
    experiment.add_argument(
        "config",
        nargs="?",
        default=None,
        help="config file (default: $PROXBOUND_CONFIG)",
    )
    experiment.add_argument("--output", default=None, help="output path (default: stdout)")
    experiment.add_argument("--json", action="store_true", help="newline-delimited JSON output")
    experiment.add_argument("--allow-large", action="store_true", help="lift the desk-scale limits")
    experiment.add_argument(
        "--metrics",
        default=None,
        metavar="PATH",
        help="write run metrics in Prometheus text format",
    )
    experiment.set_defaults(handler=_experiment)

    fit = subparsers.add_parser("fit", help="slope of log |D| against log n")
    fit.add_argument("rows", help="experiment output (CSV or JSON), or - for stdin")
    fit.set_defaults(handler=_fit)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """
    解析参数并执行子命令，返回退出码。
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except CheckFailure as e:
        logger.error("Check failed: %s", e)
        print(
            json.dumps({"error": str(e), "counterexample": e.counterexample}, default=str),
            file=sys.stderr,
        )
        return EXIT_CHECK_FAILED
    except (PreconditionError, GuardrailError, ValidationError, ValueError) as e:
        logger.error("%s: %s", type(e).__name__, e)
        return EXIT_USAGE


def main():
    """命令行主入口。"""
    log_level = os.getenv("LOG_LEVEL", "INFO").upper()
    log_format = os.getenv("LOG_FORMAT", "%(levelname)-7s %(message)s")
    logging.basicConfig(
        level=log_level,
        format=log_format,
    )
    # 从 .env 文件加载环境变量
    load_dotenv()

    sys.exit(run())


if __name__ == "__main__":
    main()
