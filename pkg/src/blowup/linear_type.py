"""线性型判定

直接判据：Rees 理想的每个生成元都能被对称理想的基约化为零。
逐点判据（孤立奇点）：局部完全交、局部 Euler、socle 循环，三者与线性型等价。
射影情形另有合冲矩阵元素理想的余维数判据；奇异轨迹维数为正时它不再充分，只作参考。

各判据的结论必须一致；不一致说明实现有缺陷，抛出 CriteriaDisagreementError。
"""

import time
from collections.abc import Sequence

import structlog

from src.blowup.presentation import (
    PresentationIdeal,
    rees_ideal,
    sorted_by_t_degree,
    symmetric_ideal,
)
from src.core.calculus import gradient
from src.core.config import get_engine_config
from src.core.constants import (
    CRITERION_LOCAL_CI,
    CRITERION_LOCALLY_EULERIAN,
    CRITERION_REES_DIRECT,
    CRITERION_SOCLE_CYCLIC,
    CRITERION_SYZYGY_CODIM,
)
from src.core.errors import (
    CriteriaDisagreementError,
    InternalConsistencyError,
    PositiveDimensionalLocusError,
)
from src.core.logging import get_audit_logger
from src.core.polynomial import Polynomial
from src.core.types import HypersurfaceInput, LinearTypeVerdict, Setting, SingularPointReport
from src.groebner.dimension import krull_dimension
from src.groebner.syzygy import syzygies
from src.ideals.ideal import Ideal
from src.ideals.operations import entries_ideal
from src.singularity.analyzer import HypersurfaceAnalysis, analyze_hypersurface
from src.singularity.invariants import gradient_ideal, jacobian_ideal
from src.singularity.points import check_input
from src.singularity.quasi import quasi_homogeneous_weights

logger = structlog.get_logger()


# ==================== 直接判据 ====================


def non_linear_relations(
    sym: PresentationIdeal, rees: PresentationIdeal
) -> list[Polynomial]:
    """不属于对称理想的 Rees 生成元，按 (T 次数, 总次数, 文本) 排序"""
    basis = sym.basis()
    return sorted_by_t_degree(rees, [g for g in rees.generators if not basis.contains(g)])


def is_linear_type(ideal: Ideal) -> LinearTypeVerdict:
    """I 是否为线性型；否时给出 T 次数最小的 Rees 生成元作为见证"""
    start = time.perf_counter()
    sym = symmetric_ideal(ideal)
    rees = rees_ideal(ideal)

    if get_engine_config().cross_check_oracles:
        rees_basis = rees.basis()
        missing = [g for g in sym.generators if not rees_basis.contains(g)]
        if missing:
            raise InternalConsistencyError(
                f"symmetric relation {missing[0]} is not in the Rees ideal"
            )

    extra = non_linear_relations(sym, rees)
    witness = extra[0] if extra else None
    logger.debug(
        "linear_type_checked",
        n_symmetric=len(sym.generators),
        n_rees=len(rees.generators),
        n_extra=len(extra),
        witness=str(witness) if witness is not None else None,
        elapsed_ms=round((time.perf_counter() - start) * 1000, 2),
    )
    return LinearTypeVerdict(
        verdict=not extra,
        methods=[CRITERION_REES_DIRECT],
        witness=witness,
    )


def syzygy_entries_codim_check(ideal: Ideal | Sequence[Polynomial], n: int) -> bool:
    """合冲矩阵全部元素生成的理想余维数为 n + 1（R 有 n + 1 个变量）

    传入生成元列表时按原样（含零、含重复）计算合冲；单位理想视为满足条件。
    """
    if isinstance(ideal, Ideal):
        gens, ring = list(ideal.generators), ideal.ring
    else:
        gens, ring = list(ideal), ideal[0].ring
    matrix = syzygies(gens, ring=ring)
    entries = entries_ideal(matrix)
    if entries.is_zero:
        return False
    dim = krull_dimension(entries.generators, entries.ring)
    codim = ring.nvars - dim if dim >= 0 else ring.nvars
    logger.debug("syzygy_entries_codim", n_columns=matrix.ncols, codim=codim, target=n + 1)
    return codim >= n + 1


# ==================== 判据合并 ====================


def _point_criteria(
    reports: Sequence[SingularPointReport],
) -> tuple[dict[str, bool], list[SingularPointReport]]:
    results = {
        CRITERION_LOCAL_CI: all(r.local_complete_intersection for r in reports),
        CRITERION_LOCALLY_EULERIAN: all(r.locally_eulerian for r in reports),
    }
    if all(r.socle_cyclic is not None for r in reports):
        results[CRITERION_SOCLE_CYCLIC] = all(r.socle_cyclic for r in reports)
    failing = [r for r in reports if not _point_passes(r)]
    return results, failing


def _point_passes(report: SingularPointReport) -> bool:
    return (
        report.locally_eulerian
        and bool(report.local_complete_intersection)
        and report.socle_cyclic is not False
    )


def _merge(
    name: str,
    results: dict[str, bool],
    evidence: Sequence[SingularPointReport],
    failing: Sequence[SingularPointReport],
    witness: Polynomial | None,
    caveats: list[str],
    informational: dict[str, bool],
) -> LinearTypeVerdict:
    values = set(results.values())
    if len(values) > 1:
        logger.error("criteria_disagreement", name=name, results=results)
        raise CriteriaDisagreementError(results)

    verdict_value = values.pop() if values else None
    verdict = LinearTypeVerdict(
        verdict=verdict_value,
        methods=list(results),
        witness=witness,
        failing_points=[r.point for r in failing] if verdict_value is False else [],
        evidence=list(evidence),
        caveats=caveats,
        informational=informational,
    )
    get_audit_logger().info(
        "linear_type_verdict",
        name=name,
        verdict=verdict_value,
        methods=verdict.methods,
        witness=str(witness) if witness is not None else None,
        failing_points=[str(p) for p in verdict.failing_points],
        caveats=caveats,
    )
    return verdict


def _analyze(
    h: HypersurfaceInput,
    preference: Sequence[str],
    caveats: list[str],
    analysis: HypersurfaceAnalysis | None = None,
) -> tuple[HypersurfaceAnalysis | None, int]:
    """逐点分析（可复用调用方已有的结果）与奇异轨迹维数

    奇异轨迹维数为正或含非有理点时分析结果为 None，并记录说明。
    """
    if analysis is None:
        try:
            analysis = analyze_hypersurface(h, preference)
        except PositiveDimensionalLocusError as e:
            caveats.append(f"singular locus has dimension {e.dimension}; point criteria skipped")
            logger.info("point_criteria_skipped", name=h.name, dimension=e.dimension)
            return None, e.dimension
    dimension = analysis.locus.dimension
    if not analysis.complete:
        caveats.append("singular locus has non-rational points; point criteria skipped")
        logger.info("point_criteria_skipped", name=h.name, reason="non_rational_points")
        return None, dimension
    return analysis, dimension


# ==================== 仿射：Jacobian 线性型 ====================


def jacobian_linear_type(
    f: Polynomial,
    direct_rees: bool = False,
    name: str = "f",
    preference: Sequence[str] = (),
    analysis: HypersurfaceAnalysis | None = None,
) -> LinearTypeVerdict:
    """仿射超曲面 V(f) 是否为 Jacobian 线性型

    孤立奇点时比较局部完全交、局部 Euler、socle 循环三个判据；
    direct_rees 为真时再与 I(f) 的直接 Rees 比较交叉验证。
    analysis 为调用方已完成的逐点分析（可选）。
    """
    h = HypersurfaceInput(f, Setting.AFFINE, name=name)
    check_input(h)
    caveats: list[str] = []
    results: dict[str, bool] = {}
    evidence: list[SingularPointReport] = []
    failing: list[SingularPointReport] = []

    analysis, _ = _analyze(h, preference, caveats, analysis)
    if analysis is not None:
        evidence = analysis.reports
        point_results, failing = _point_criteria(evidence)
        results.update(point_results)

    witness = None
    if direct_rees:
        direct = is_linear_type(jacobian_ideal(f))
        results[CRITERION_REES_DIRECT] = bool(direct.verdict)
        witness = direct.witness

    informational = {"quasi-homogeneous": quasi_homogeneous_weights(f) is not None}
    return _merge(name, results, evidence, failing, witness, caveats, informational)


# ==================== 射影：梯度线性型 ====================


def gradient_linear_type(
    f: Polynomial,
    direct_rees: bool = False,
    name: str = "F",
    preference: Sequence[str] = (),
    analysis: HypersurfaceAnalysis | None = None,
) -> LinearTypeVerdict:
    """射影超曲面 V(F) 是否为梯度线性型

    合冲矩阵元素理想的余维数判据总是运行；奇异点孤立且都是有理点时
    再比较各仿射卡中的逐点判据。奇异轨迹维数为正时余维数判据只作参考，
    结论只能来自直接 Rees 比较；不运行直接比较则结论为 None。
    """
    h = HypersurfaceInput(f, Setting.PROJECTIVE, name=name)
    check_input(h)
    caveats: list[str] = []
    n = f.ring.nvars - 1

    codim_ok = syzygy_entries_codim_check(gradient(f), n)
    results: dict[str, bool] = {}
    informational: dict[str, bool] = {}

    evidence: list[SingularPointReport] = []
    failing: list[SingularPointReport] = []
    analysis, dimension = _analyze(h, preference, caveats, analysis)
    if dimension > 0:
        caveats.append("syzygy-codim is only decisive for isolated singularities")
        informational[CRITERION_SYZYGY_CODIM] = codim_ok
        if not direct_rees:
            caveats.append("positive-dimensional locus: the verdict needs direct-rees")
    else:
        results[CRITERION_SYZYGY_CODIM] = codim_ok
    if analysis is not None:
        evidence = analysis.reports
        point_results, failing = _point_criteria(evidence)
        results.update(point_results)

    witness = None
    if direct_rees:
        direct = is_linear_type(gradient_ideal(f))
        results[CRITERION_REES_DIRECT] = bool(direct.verdict)
        witness = direct.witness

    if analysis is not None and f.ring.nvars == 3:
        informational["simple-singularities"] = all(
            r.ade is not None and r.ade.is_simple for r in evidence
        )
    return _merge(name, results, evidence, failing, witness, caveats, informational)
