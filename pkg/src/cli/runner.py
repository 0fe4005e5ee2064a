"""请求执行

AnalysisRequest → 解析输入 → 对每个命名多项式执行所请求的命令 → ReportBatch。
库异常按 exit_code 映射为退出码，并以结构化形式写入报告；同一输入的其余多项式继续处理。
"""

import time
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal, get_args

import structlog
from pydantic import BaseModel, Field, field_validator

from src.blowup.linear_type import gradient_linear_type, jacobian_linear_type
from src.blowup.presentation import rees_ideal, symmetric_ideal
from src.cli.report import (
    ErrorModel,
    LocusModel,
    PointModel,
    PresentationModel,
    Report,
    ReportBatch,
    SyzygyModel,
    VerdictModel,
)
from src.core.calculus import gradient
from src.core.errors import (
    GradlinError,
    NotPlaneCurveError,
    PositiveDimensionalLocusError,
)
from src.core.parser import Program, parse_program
from src.core.polynomial import Polynomial
from src.core.types import HypersurfaceInput, Setting
from src.groebner.syzygy import syzygies
from src.ideals.ideal import Ideal
from src.singularity.ade import genus
from src.singularity.analyzer import HypersurfaceAnalysis, analyze_hypersurface
from src.singularity.invariants import gradient_ideal, jacobian_ideal
from src.singularity.points import check_input

logger = structlog.get_logger()

Command = Literal[
    "analyze",
    "milnor",
    "tjurina",
    "eulerian",
    "classify",
    "syzygy",
    "sym",
    "rees",
    "linear-type",
    "genus",
]

COMMANDS: tuple[str, ...] = get_args(Command)

# 需要逐点分析的命令
POINT_COMMANDS = frozenset({"analyze", "milnor", "tjurina", "eulerian", "classify", "genus"})


class AnalysisRequest(BaseModel):
    """一次 CLI 调用"""

    source: str = Field(description="输入文件路径，或 inline 为真时的输入文本")
    inline: bool = False
    setting: Setting | None = Field(
        default=None,
        description="几何背景；为空时使用输入文件中的 setting 语句，缺省为仿射",
    )
    commands: list[Command] = Field(min_length=1)
    direct_rees: bool = False
    assert_irreducible: bool = False
    chart: list[str] = Field(
        default_factory=list, description="射影点优先使用的仿射卡（仿射输入忽略）"
    )
    names: list[str] = Field(default_factory=list, description="只处理这些命名多项式")

    @field_validator("commands")
    @classmethod
    def dedupe_commands(cls, v: list[Command]) -> list[Command]:
        return list(dict.fromkeys(v))


# ==================== 单个多项式 ====================


@contextmanager
def _timed(timings: dict[str, float], key: str) -> Iterator[None]:
    start = time.perf_counter()
    try:
        yield
    finally:
        timings[key] = round((time.perf_counter() - start) * 1000, 2)


def _target_ideal(h: HypersurfaceInput) -> Ideal:
    """射影输入取梯度理想 J(F)，仿射输入取 Jacobian 理想 I(f)"""
    return gradient_ideal(h.f) if h.is_projective else jacobian_ideal(h.f)


def _target_generators(h: HypersurfaceInput) -> list[Polynomial]:
    if h.is_projective:
        return gradient(h.f)
    return [h.f, *gradient(h.f)]


def _is_plane_curve(h: HypersurfaceInput) -> bool:
    return h.f.ring.nvars == (3 if h.is_projective else 2)


def analyze_polynomial(
    name: str,
    f: Polynomial,
    setting: Setting,
    request: AnalysisRequest,
    source: str | None = None,
) -> Report:
    """对单个多项式执行请求中的全部命令"""
    commands = list(request.commands)
    report = Report(
        name=name,
        input=source if source is not None else str(f),
        setting=setting.value,
        variables=list(f.ring.variables),
        commands=commands,
    )
    h = HypersurfaceInput(f, setting, request.assert_irreducible, name)
    timings = report.timings
    log = logger.bind(name=name, setting=setting.value)
    log.info("polynomial_started", commands=commands)

    try:
        with _timed(timings, "input-check"):
            check_input(h)
        unknown = [c for c in request.chart if c not in f.ring.variables]
        if h.is_projective and unknown:
            raise GradlinError(f"chart variable {unknown[0]!r} is not in the ring")

        analysis: HypersurfaceAnalysis | None = None
        if POINT_COMMANDS.intersection(commands):
            if "classify" in commands and not _is_plane_curve(h):
                raise NotPlaneCurveError("ADE classification needs a plane curve")
            with_socle = "analyze" in commands or "linear-type" in commands
            with _timed(timings, "points"):
                try:
                    analysis = analyze_hypersurface(h, request.chart, with_socle=with_socle)
                except PositiveDimensionalLocusError as e:
                    if set(commands) & (POINT_COMMANDS - {"analyze"}):
                        raise
                    report.locus = LocusModel(dimension=e.dimension, complete=False)
                    report.warnings.append(
                        f"singular locus has dimension {e.dimension}; no point reports"
                    )
            if analysis is not None:
                report.locus = LocusModel.from_locus(analysis.locus)
                report.singular_points = [PointModel.from_report(r) for r in analysis.reports]
                if not analysis.complete:
                    report.warnings.append(
                        "singular locus has non-rational points; reports cover rational points"
                    )

        if "genus" in commands and analysis is not None:
            with _timed(timings, "genus"):
                report.genus = genus(h, analysis.reports, analysis.locus.leftover)

        if "syzygy" in commands:
            with _timed(timings, "syzygy"):
                matrix = syzygies(_target_generators(h), ring=f.ring)
                report.syzygies = SyzygyModel.from_matrix(matrix)

        if "sym" in commands:
            with _timed(timings, "sym"):
                report.symmetric = PresentationModel.from_presentation(
                    symmetric_ideal(_target_ideal(h))
                )

        if "rees" in commands:
            with _timed(timings, "rees"):
                report.rees = PresentationModel.from_presentation(rees_ideal(_target_ideal(h)))

        if "linear-type" in commands or "analyze" in commands:
            decide = gradient_linear_type if h.is_projective else jacobian_linear_type
            with _timed(timings, "linear-type"):
                verdict = decide(
                    f,
                    direct_rees=request.direct_rees,
                    name=name,
                    preference=request.chart,
                    analysis=analysis,
                )
                report.linear_type = VerdictModel.from_verdict(verdict)

    except GradlinError as e:
        report.error = ErrorModel.from_exception(e)
        log.warning("polynomial_failed", kind=type(e).__name__, error=str(e))
        return report

    log.info("polynomial_finished", elapsed_ms=round(sum(timings.values()), 2))
    return report


# ==================== 请求 ====================


def _read_source(request: AnalysisRequest) -> tuple[str, str]:
    """返回 (来源标签, 文本)"""
    if request.inline:
        return "<inline>", request.source
    path = Path(request.source)
    return str(path), path.read_text(encoding="utf-8")


def run(request: AnalysisRequest) -> tuple[ReportBatch, int]:
    """执行请求，返回报告与进程退出码"""
    start = time.perf_counter()
    try:
        label, text = _read_source(request)
    except OSError as e:
        logger.error("input_unreadable", source=request.source, error=str(e))
        batch = ReportBatch(
            source=request.source,
            error=ErrorModel(kind="InputError", message=str(e), exit_code=1),
        )
        return batch, batch.exit_code

    batch = ReportBatch(source=label)
    try:
        program = parse_program(text)
    except GradlinError as e:
        logger.error("input_parse_failed", source=label, error=str(e))
        batch.error = ErrorModel.from_exception(e)
        return batch, batch.exit_code

    missing = [n for n in request.names if n not in program.polynomials]
    if missing:
        batch.error = ErrorModel(
            kind="UsageError", message=f"no polynomial named {missing[0]!r}", exit_code=1
        )
        return batch, batch.exit_code

    setting = request.setting or program.setting or Setting.AFFINE
    for name, f in _selected(program, request):
        batch.reports.append(
            analyze_polynomial(name, f, setting, request, program.sources.get(name))
        )

    logger.info(
        "request_finished",
        source=label,
        n_reports=len(batch.reports),
        exit_code=batch.exit_code,
        elapsed_ms=round((time.perf_counter() - start) * 1000, 2),
    )
    return batch, batch.exit_code


def _selected(program: Program, request: AnalysisRequest) -> list[tuple[str, Polynomial]]:
    if not request.names:
        return list(program.polynomials.items())
    return [(n, program.polynomials[n]) for n in request.names]


# ==================== 语料库 ====================


@dataclass
class CorpusEntry:
    """语料库中一个多项式的结果"""

    file: str
    name: str
    verdict: bool | None
    exit_code: int
    message: str | None = None


@dataclass
class CorpusSummary:
    """语料库运行结果"""

    directory: str
    entries: list[CorpusEntry] = field(default_factory=list)
    batches: list[ReportBatch] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return max((e.exit_code for e in self.entries), default=0)

    @property
    def counts(self) -> dict[str, int]:
        counts = {"true": 0, "false": 0, "undecided": 0, "failed": 0}
        for e in self.entries:
            if e.exit_code:
                counts["failed"] += 1
            elif e.verdict is None:
                counts["undecided"] += 1
            else:
                counts["true" if e.verdict else "false"] += 1
        return counts


def run_corpus(
    directory: str | Path,
    request_factory: Callable[[str], AnalysisRequest],
) -> CorpusSummary:
    """对目录下每个 *.poly 文件（按文件名排序）执行请求"""
    root = Path(directory)
    summary = CorpusSummary(directory=str(root))
    files = sorted(root.glob("*.poly"))
    logger.info("corpus_started", directory=str(root), n_files=len(files))

    for path in files:
        batch, _ = run(request_factory(str(path)))
        summary.batches.append(batch)
        if batch.error:
            summary.entries.append(
                CorpusEntry(path.name, "-", None, batch.error.exit_code, batch.error.message)
            )
            continue
        for report in batch.reports:
            verdict = report.linear_type.verdict if report.linear_type else None
            summary.entries.append(
                CorpusEntry(
                    path.name,
                    report.name,
                    verdict,
                    report.exit_code,
                    report.error.message if report.error else None,
                )
            )

    logger.info("corpus_finished", directory=str(root), **summary.counts)
    return summary
