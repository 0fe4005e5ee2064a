"""gradlin 命令行入口

子命令：
    analyze / milnor / tjurina / eulerian / classify / syzygy / sym / rees /
    linear-type / genus    对输入文件中的每个命名多项式执行对应计算
    corpus                 对目录下全部 *.poly 文件判定线性型并汇总

退出码：0 成功，1 用法或解析错误，2 数学前提不满足，3 资源上限，4 判据互相矛盾。
"""

import argparse
import json
import sys
from collections.abc import Sequence
from pathlib import Path

import structlog
from pydantic import ValidationError
from rich.console import Console

from src.cli.console import render_batch, render_corpus
from src.cli.runner import COMMANDS, AnalysisRequest, run, run_corpus
from src.core.config import Config, load_config, set_engine_config
from src.core.constants import EXIT_USAGE
from src.core.logging import LogLevel, setup_logging
from src.core.types import Setting

logger = structlog.get_logger()

_LOG_LEVELS = [
    LogLevel.DEBUG,
    LogLevel.INFO,
    LogLevel.WARNING,
    LogLevel.ERROR,
    LogLevel.CRITICAL,
]

_HELP = {
    "analyze": "完整分析：奇点、逐点不变量、线性型",
    "milnor": "各奇点的 Milnor 数",
    "tjurina": "各奇点的 Tjurina 数",
    "eulerian": "各奇点是否局部 Euler（μ = τ）",
    "classify": "平面曲线奇点的 ADE 分类",
    "syzygy": "梯度理想（射影）或 Jacobian 理想（仿射）的合冲矩阵",
    "sym": "对称代数的表示理想",
    "rees": "Rees 代数的表示理想",
    "linear-type": "梯度 / Jacobian 线性型判定",
    "genus": "不可约射影平面曲线的几何亏格",
}


def _add_common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--setting",
        choices=[s.value for s in Setting],
        help="几何背景（默认取输入文件中的 setting 语句，否则为 affine）",
    )
    parser.add_argument("--direct-rees", action="store_true", help="同时直接比较 Rees 理想")
    parser.add_argument(
        "--assert-irreducible", action="store_true", help="声明曲线不可约（genus 需要）"
    )
    parser.add_argument(
        "--chart",
        action="append",
        default=[],
        metavar="VAR",
        help="射影点优先使用的仿射卡（可重复）",
    )
    parser.add_argument("--json", metavar="OUT", help="写出 JSON 报告；'-' 表示标准输出")
    parser.add_argument("--config", help="YAML 配置文件路径")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=_LOG_LEVELS,
        default=LogLevel.WARNING,
        help="日志级别（默认 WARNING）",
    )
    parser.add_argument("--log-dir", help="日志目录（启用文件日志与审计日志）")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradlin",
        description="超曲面奇点不变量与梯度 / Jacobian 线性型判定",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    for command in COMMANDS:
        sub = subparsers.add_parser(command, help=_HELP[command])
        sub.add_argument("source", metavar="FILE", help="输入文件（--inline 时为输入文本）")
        sub.add_argument("--inline", action="store_true", help="把 FILE 当作输入文本")
        sub.add_argument(
            "--name", action="append", default=[], help="只处理指定的命名多项式（可重复）"
        )
        _add_common_options(sub)

    corpus = subparsers.add_parser("corpus", help="批量判定目录下全部 *.poly 文件")
    corpus.add_argument("directory", help="语料库目录")
    corpus.add_argument(
        "--command",
        dest="corpus_commands",
        action="append",
        choices=COMMANDS,
        help="每个文件执行的命令（默认 linear-type）",
    )
    _add_common_options(corpus)
    return parser


def _request(args: argparse.Namespace, config: Config, source: str) -> AnalysisRequest:
    if args.command == "corpus":
        commands = args.corpus_commands or ["linear-type"]
        inline, names = False, []
    else:
        commands = [args.command]
        inline, names = args.inline, args.name
    return AnalysisRequest(
        source=source,
        inline=inline,
        setting=Setting(args.setting) if args.setting else None,
        commands=commands,
        direct_rees=args.direct_rees or config.analysis.direct_rees,
        assert_irreducible=args.assert_irreducible,
        chart=args.chart or config.analysis.chart_preference,
        names=names,
    )


def _write_json(text: str, target: str) -> None:
    if target == "-":
        sys.stdout.write(text + "\n")
        return
    path = Path(target)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text + "\n", encoding="utf-8")
    logger.info("report_saved", file=str(path))


def main(argv: Sequence[str] | None = None) -> int:
    """主函数，返回进程退出码"""
    args = build_parser().parse_args(argv)

    setup_logging(log_level=args.log_level, log_dir=args.log_dir)

    try:
        config = load_config(args.config)
        set_engine_config(config.engine)
        if args.command == "corpus":
            summary = run_corpus(args.directory, lambda path: _request(args, config, path))
            console = Console(stderr=args.json == "-")
            render_corpus(summary, console)
            if args.json:
                payload = json.dumps(
                    [b.model_dump(mode="json") for b in summary.batches],
                    indent=config.report.indent,
                )
                _write_json(payload, args.json)
            return summary.exit_code

        batch, exit_code = run(_request(args, config, args.source))
    except (ValidationError, FileNotFoundError) as e:
        logger.error("invalid_request", error=str(e))
        Console(stderr=True).print(f"[red]error[/red] {e}")
        return EXIT_USAGE

    console = Console(stderr=args.json == "-")
    render_batch(batch, console)
    if args.json:
        _write_json(batch.to_json(config.report.indent), args.json)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
