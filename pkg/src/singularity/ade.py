"""平面曲线单纯奇点（ADE）分类与亏格

分类决策树只用重数、Milnor 数和三次射流的根结构：
- 重数 1：光滑
- 重数 2：A_μ
- 重数 3：三次射流作为二元形式，用 gcd(∂c/∂x, ∂c/∂y) 的次数判断根的重数
  （0：三个不同根 → D_4；1：一个二重根 → D_μ；2：三重根 → μ ∈ {6,7,8} 时为 E_μ）
- 重数 ≥ 4：非单纯
"""

from collections.abc import Sequence

import structlog

from src.core.calculus import gradient, initial_degree, translate_to_origin
from src.core.constants import E_BRANCHES
from src.core.errors import (
    IncompleteLocusError,
    IrreducibilityNotAssertedError,
    NotOnHypersurfaceError,
    NotPlaneCurveError,
    NotSimpleError,
    PreconditionError,
)
from src.core.polynomial import Polynomial
from src.core.symbolic import polynomial_gcd
from src.core.types import ADEFamily, ADEType, HypersurfaceInput, Point, SingularPointReport
from src.ideals.ideal import Ideal
from src.singularity.invariants import milnor_number

logger = structlog.get_logger()


def _cubic_root_type(cubic: Polynomial) -> int:
    """二元三次形式 c 的 deg gcd(c_x, c_y)：0 三个不同根，1 一个二重根，2 三重根"""
    cx, cy = gradient(cubic)
    return polynomial_gcd(cx, cy).total_degree()


def classify_ade(f: Polynomial, p: Point) -> ADEType:
    """f 在 p 处的 ADE 类型（f 为两个变量的仿射多项式）"""
    if f.ring.nvars != 2:
        raise NotPlaneCurveError(f"ADE classification needs 2 variables, got ({f.ring})")
    g = translate_to_origin(f, p)
    if g.constant_term:
        raise NotOnHypersurfaceError(f"point {p} is not on V({f})")
    m = initial_degree(g)
    if m == 1:
        return ADEType(ADEFamily.SMOOTH)
    mu = milnor_number(f, p)
    if m >= 4:
        return ADEType(ADEFamily.NOT_SIMPLE)
    if m == 2:
        return ADEType(ADEFamily.A, mu)

    roots = _cubic_root_type(g.homogeneous_part(3))
    if roots == 0:
        return ADEType(ADEFamily.D, 4)
    if roots == 1:
        return ADEType(ADEFamily.D, mu)
    if mu in E_BRANCHES:
        return ADEType(ADEFamily.E, mu)
    return ADEType(ADEFamily.NOT_SIMPLE)


def delta_and_branches(t: ADEType) -> tuple[int, int]:
    """(δ, r)：r 按奇偶规则，δ = (μ + r - 1)/2，μ 为下标"""
    if not t.is_simple or t.index is None:
        raise NotSimpleError(f"{t} is not a simple singularity")
    k = t.index
    if t.family is ADEFamily.A:
        r = 2 if k % 2 else 1
    elif t.family is ADEFamily.D:
        r = 3 if k % 2 == 0 else 2
    else:
        r = E_BRANCHES[k]
    return (k + r - 1) // 2, r


def genus(
    h: HypersurfaceInput,
    reports: Sequence[SingularPointReport],
    leftover: Ideal | None = None,
) -> int:
    """不可约射影平面曲线的几何亏格 (d-1)(d-2)/2 - Σ δ_p"""
    if not h.is_projective or h.f.ring.nvars != 3:
        raise NotPlaneCurveError("genus needs a projective plane curve")
    if not h.assert_irreducible:
        raise IrreducibilityNotAssertedError(
            "genus formula holds for irreducible curves; pass assert_irreducible"
        )
    if leftover is not None:
        raise IncompleteLocusError(f"non-rational singular points remain: {leftover}")
    total = 0
    for report in reports:
        if report.ade is None or not report.ade.is_simple or report.delta is None:
            raise NotSimpleError(f"singular point {report.point} is not classified as simple")
        total += report.delta
    d = h.f.total_degree()
    g = (d - 1) * (d - 2) // 2 - total
    if g < 0:
        raise PreconditionError(f"negative genus {g}: the curve is reducible")
    logger.debug("genus_computed", name=h.name, degree=d, delta_sum=total, genus=g)
    return g
