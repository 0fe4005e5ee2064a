"""逐点分析器

对每个有理奇点选择仿射卡、平移到原点，计算重数、μ、τ、Euler 性、局部完全交、
socle 循环性；平面曲线再做 ADE 分类与 δ、r。
"""

import time
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import structlog

from src.core.calculus import dehomogenize
from src.core.config import get_engine_config
from src.core.errors import InternalConsistencyError
from src.core.polynomial import Polynomial
from src.core.types import HypersurfaceInput, Point, SingularPointReport
from src.singularity.ade import classify_ade, delta_and_branches
from src.singularity.invariants import (
    is_local_complete_intersection,
    is_locally_eulerian,
    milnor_number,
    multiplicity,
    socle_module_cyclic,
    tjurina_number,
)
from src.singularity.points import SingularLocus, singular_points

logger = structlog.get_logger()


@dataclass(frozen=True)
class LocalChart:
    """点所在的仿射卡：卡中的多项式、卡中的坐标、卡名（仿射输入为 None）"""

    f: Polynomial
    point: Point
    chart: str | None = None


def local_chart(h: HypersurfaceInput, p: Point, preference: Sequence[str] = ()) -> LocalChart:
    """射影点默认使用最后一个非零坐标的卡；preference 中第一个含该点的卡优先"""
    if not h.is_projective:
        return LocalChart(h.f, p)
    ring = h.f.ring
    index = p.chart_index()
    for name in preference:
        i = ring.index(name)
        if p.coordinates[i]:
            index = i
            break
    return LocalChart(dehomogenize(h.f, index), p.in_chart(index), ring.variables[index])


def analyze_point(
    h: HypersurfaceInput,
    p: Point,
    preference: Sequence[str] = (),
    with_socle: bool = True,
) -> SingularPointReport:
    """单个奇点的完整报告"""
    local = local_chart(h, p, preference)
    g, q = local.f, local.point
    mu = milnor_number(g, q)
    tau = tjurina_number(g, q)
    eulerian = is_locally_eulerian(g, q)

    ade = delta = branches = None
    if g.ring.nvars == 2:
        ade = classify_ade(g, q)
        if ade.is_simple:
            delta, branches = delta_and_branches(ade)

    try:
        report = SingularPointReport(
            point=p,
            milnor=mu,
            tjurina=tau,
            multiplicity=multiplicity(g, q),
            locally_eulerian=eulerian,
            chart=local.chart,
            local_complete_intersection=is_local_complete_intersection(g, q),
            socle_cyclic=socle_module_cyclic(g, q) if with_socle else None,
            ade=ade,
            delta=delta,
            branches=branches,
        )
    except ValueError as e:
        logger.error("point_report_inconsistent", point=str(p), error=str(e), exc_info=True)
        raise InternalConsistencyError(str(e)) from e

    logger.debug(
        "singular_point_analyzed",
        point=str(p),
        chart=local.chart,
        milnor=mu,
        tjurina=tau,
        ade=ade.label if ade else None,
    )
    return report


@dataclass
class HypersurfaceAnalysis:
    """奇点集合与逐点报告（按点的字典序）"""

    input: HypersurfaceInput
    locus: SingularLocus
    reports: list[SingularPointReport] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return self.locus.complete


def analyze_hypersurface(
    h: HypersurfaceInput,
    preference: Sequence[str] = (),
    with_socle: bool = True,
) -> HypersurfaceAnalysis:
    """枚举奇点并逐点分析；workers > 1 时用线程池并发，结果顺序与点序一致"""
    start = time.perf_counter()
    locus = singular_points(h)
    workers = get_engine_config().workers

    def run(p: Point) -> SingularPointReport:
        return analyze_point(h, p, preference, with_socle)

    if workers > 1 and len(locus.points) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(run, locus.points))
    else:
        reports = [run(p) for p in locus.points]

    logger.info(
        "hypersurface_analyzed",
        name=h.name,
        n_points=len(reports),
        complete=locus.complete,
        elapsed_ms=round((time.perf_counter() - start) * 1000, 2),
    )
    return HypersurfaceAnalysis(h, locus, reports)
