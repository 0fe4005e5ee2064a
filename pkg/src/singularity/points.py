"""奇点的枚举

仿射情形：V(I(f)) 的全部有理点。射影情形：V(J(F)) 按标准仿射卡逐个扫描，
从最后一个变量的卡开始，每个点只在它的默认卡（最后一个非零坐标）中出现一次。

求点方法：对每个变量消去其余变量得到一元多项式，取其有理根，
在笛卡尔积中筛选出所有生成元都为零的点；剩余的非有理点由饱和后的理想给出。
"""

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import structlog

from src.core.calculus import dehomogenize, gradient
from src.core.constants import MIN_PROJECTIVE_DEGREE
from src.core.errors import (
    NonReducedError,
    NotHomogeneousError,
    PositiveDimensionalLocusError,
    PreconditionError,
)
from src.core.polynomial import Polynomial
from src.core.symbolic import polynomial_gcd, rational_roots
from src.core.types import HypersurfaceInput, Point, sort_points
from src.groebner.dimension import krull_dimension
from src.groebner.elimination import eliminate
from src.ideals.ideal import Ideal
from src.ideals.operations import saturation, vanishes_at
from src.singularity.invariants import jacobian_ideal

logger = structlog.get_logger()


@dataclass
class SingularLocus:
    """奇点集合：有理点 + 剩余理想（非有理点，或 None）"""

    points: list[Point] = field(default_factory=list)
    leftover: Ideal | None = None
    leftover_chart: str | None = None
    dimension: int = 0

    @property
    def complete(self) -> bool:
        return self.leftover is None


# ==================== 输入检查 ====================


def check_reduced(f: Polynomial) -> None:
    """f 无重因子：对每个变量 x_i，gcd(f, ∂f/∂x_i) 不含 x_i"""
    for i, df in enumerate(gradient(f)):
        if df.is_zero:
            continue
        g = polynomial_gcd(f, df)
        if g.involves(i):
            raise NonReducedError(str(g))


def check_input(h: HypersurfaceInput) -> None:
    f = h.f
    if f.is_zero or f.is_constant:
        raise PreconditionError(f"{h.name} does not define a hypersurface")
    if h.is_projective:
        if not f.is_homogeneous():
            raise NotHomogeneousError(f"projective input {h.name} is not homogeneous")
        if f.total_degree() < MIN_PROJECTIVE_DEGREE:
            degree = f.total_degree()
            raise PreconditionError(
                f"projective input needs degree >= {MIN_PROJECTIVE_DEGREE}, got {degree}"
            )
    check_reduced(f)


# ==================== 有理点 ====================


def rational_points(ideal: Ideal) -> tuple[list[Point], Ideal | None]:
    """零维理想的全部有理零点，以及去掉这些点后的剩余理想（为单位理想时返回 None）"""
    ring = ideal.ring
    if ideal.is_unit():
        return [], None
    candidates: list[list[Fraction]] = []
    for i, name in enumerate(ring.variables):
        others = [v for v in ring.variables if v != name]
        univariate = [g for g in eliminate(ideal.generators, others, ring) if not g.is_zero]
        if not univariate:
            raise PositiveDimensionalLocusError(1, f"variable {name} is unbounded on {ideal}")
        candidates.append(rational_roots(univariate[0], i))

    points = [Point(coords) for coords in product(*candidates)]
    points = [p for p in points if vanishes_at(ideal, p)]

    if not points:
        return [], ideal
    maximal = Ideal.unit(ring)
    for p in points:
        maximal = maximal * Ideal.maximal_at(p, ring)
    rest = saturation(ideal, maximal)
    return points, None if rest.is_unit() else rest


# ==================== 奇点集合 ====================


def _affine_locus(f: Polynomial) -> SingularLocus:
    ideal = jacobian_ideal(f)
    dim = ideal.dimension()
    if dim > 0:
        raise PositiveDimensionalLocusError(dim)
    if dim < 0:
        return SingularLocus(dimension=-1)
    points, leftover = rational_points(ideal)
    return SingularLocus(points=sort_points(points), leftover=leftover)


def _chart_ideal(f: Polynomial, i: int) -> Ideal:
    """第 i 个卡中 V(J(F)) 且后续坐标为零的部分"""
    partials = [dehomogenize(df, i) if not df.is_zero else None for df in gradient(f)]
    ring = f.ring.without([i])
    gens = [p for p in partials if p is not None]
    for j in range(i + 1, f.ring.nvars):
        gens.append(Polynomial.variable(ring, f.ring.variables[j]))
    return Ideal(gens, ring)


def _projective_locus(f: Polynomial) -> SingularLocus:
    cone_dim = krull_dimension([df for df in gradient(f) if not df.is_zero], f.ring)
    if cone_dim > 1:
        raise PositiveDimensionalLocusError(cone_dim - 1)
    if cone_dim < 1:
        return SingularLocus(dimension=-1)

    locus = SingularLocus()
    for i in reversed(range(f.ring.nvars)):
        points, leftover = rational_points(_chart_ideal(f, i))
        locus.points.extend(Point.from_chart(p, i) for p in points)
        if leftover is not None and locus.leftover is None:
            locus.leftover = leftover
            locus.leftover_chart = f.ring.variables[i]
    locus.points = sort_points(locus.points)
    return locus


def singular_points(h: HypersurfaceInput) -> SingularLocus:
    """Sing(X) 的有理点

    仿射：V(I(f))；射影：V(J(F)) ⊂ P^n。奇异轨迹维数为正时抛出 PositiveDimensionalLocusError。
    """
    start = time.perf_counter()
    check_input(h)
    locus = _projective_locus(h.f) if h.is_projective else _affine_locus(h.f)
    logger.info(
        "singular_points_enumerated",
        name=h.name,
        setting=h.setting.value,
        n_points=len(locus.points),
        complete=locus.complete,
        elapsed_ms=round((time.perf_counter() - start) * 1000, 2),
    )
    return locus


def singular_locus_dimension(h: HypersurfaceInput) -> int:
    """Sing(X) 的维数（空集为 -1），不做枚举"""
    if h.is_projective:
        return krull_dimension([df for df in gradient(h.f) if not df.is_zero], h.f.ring) - 1
    return jacobian_ideal(h.f).dimension()
