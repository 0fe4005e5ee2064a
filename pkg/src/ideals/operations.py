"""派生理想运算

交、商理想、饱和、点处的准素分支、素理想处的局部化、矩阵元素理想，
以及局部极小生成元个数（极大理想处与一般素理想处）。
"""

import time
from collections.abc import Sequence
from itertools import combinations
from fractions import Fraction
from typing import Literal

import structlog

from src.core.config import get_engine_config
from src.core.constants import COLON_VARIABLE
from src.core.errors import (
    NonIsolatedSingularityError,
    PointNotInVarietyError,
    RingMismatchError,
    SaturationError,
)
from src.core.orders import NEGDEGREVLEX, Exponent, MonomialOrder
from src.core.polynomial import Polynomial, RingContext
from src.core.symbolic import determinant, matrix_rank
from src.core.types import Point
from src.groebner.basis import Basis
from src.groebner.dimension import staircase
from src.groebner.elimination import eliminate
from src.groebner.kernel import divides, subtract_multiple
from src.groebner.syzygy import SyzygyMatrix, syzygies
from src.ideals.ideal import Ideal

logger = structlog.get_logger()

SaturationMethod = Literal["iterate", "rabinowitsch"]


def fresh_variable(ring: RingContext, name: str) -> str:
    """与环中变量不冲突的辅助变量名"""
    while name in ring.variables:
        name = "_" + name
    return name


def _same_ring(a: Ideal, b: Ideal) -> None:
    if a.ring != b.ring:
        raise RingMismatchError(f"ring mismatch: ({a.ring}) vs ({b.ring})")


# ==================== 交 ====================


def intersection(a: Ideal, b: Ideal) -> Ideal:
    """I ∩ K = (s·I + (1−s)·K) ∩ R"""
    _same_ring(a, b)
    ring = a.ring
    if a.is_zero or b.is_zero:
        return Ideal.zero(ring)
    if a.is_unit():
        return b
    if b.is_unit():
        return a

    s_name = fresh_variable(ring, COLON_VARIABLE)
    ext = ring.extend([s_name])
    s = Polynomial.variable(ext, s_name)
    gens = [s * g.embed(ext) for g in a.generators]
    gens += [(1 - s) * g.embed(ext) for g in b.generators]
    result = eliminate(gens, [s_name], ext)
    return Ideal([g.restrict(ring) for g in result], ring)


def intersect_all(ideals: Sequence[Ideal], ring: RingContext) -> Ideal:
    """多个理想的交；空列表为单位理想"""
    result = Ideal.unit(ring)
    for ideal in ideals:
        result = intersection(result, ideal)
    return result


# ==================== 商理想 ====================


def principal_quotient(ideal: Ideal, h: Polynomial) -> Ideal:
    """I : (h) = (I ∩ (h)) / h"""
    ring = ideal.ring
    if h.is_zero:
        return Ideal.unit(ring)
    if ideal.is_zero:
        return Ideal.zero(ring)
    if ideal.contains(h):
        return Ideal.unit(ring)
    meet = intersection(ideal, Ideal([h], ring))
    return Ideal([g.exact_divide(h) for g in meet.generators], ring)


def ideal_quotient(ideal: Ideal, other: Ideal) -> Ideal:
    """I : J = {g : gJ ⊆ I} = ∩_h I : (h)"""
    _same_ring(ideal, other)
    parts = [principal_quotient(ideal, h) for h in other.generators]
    return intersect_all(parts, ideal.ring).reduced()


# ==================== 饱和 ====================


def _saturate_iterate(ideal: Ideal, other: Ideal, cap: int) -> Ideal:
    current = ideal.reduced()
    for iteration in range(1, cap + 1):
        nxt = ideal_quotient(current, other)
        if current.contains_ideal(nxt):
            logger.debug("saturation_stable", iterations=iteration)
            return current
        current = nxt
    raise SaturationError(cap)


def _saturate_principal_rabinowitsch(ideal: Ideal, h: Polynomial) -> Ideal:
    """I : h^∞ = (I + (1 − s·h)) ∩ R"""
    ring = ideal.ring
    s_name = fresh_variable(ring, COLON_VARIABLE)
    ext = ring.extend([s_name])
    s = Polynomial.variable(ext, s_name)
    gens = [g.embed(ext) for g in ideal.generators] + [1 - s * h.embed(ext)]
    result = eliminate(gens, [s_name], ext)
    return Ideal([g.restrict(ring) for g in result], ring)


def saturation(
    ideal: Ideal,
    other: Ideal,
    method: SaturationMethod | None = None,
) -> Ideal:
    """I : J^∞

    iterate：反复做商理想直到稳定（上限 saturation_cap，超出抛出 SaturationError）；
    rabinowitsch：对 J 的每个生成元引入辅助变量消元，再取交。
    """
    _same_ring(ideal, other)
    engine = get_engine_config()
    method = method or engine.saturation_method
    if other.is_zero:
        return Ideal.unit(ideal.ring)
    if method == "rabinowitsch":
        parts = [_saturate_principal_rabinowitsch(ideal, h) for h in other.generators]
        return intersect_all(parts, ideal.ring).reduced()
    return _saturate_iterate(ideal, other, engine.saturation_cap)


# ==================== 点处准素分支 ====================


def vanishes_at(ideal: Ideal, p: Point) -> bool:
    return all(not g.evaluate(p.coordinates) for g in ideal.generators)


def primary_component_at_point(ideal: Ideal, p: Point) -> Ideal:
    """孤立点 p 处的 m_p-准素分支 Q = I : (I : m_p^∞)^∞

    整体商空间维数 dim_k R/Q 等于局部维数 dim_k (R/I)_{m_p}。
    """
    if not vanishes_at(ideal, p):
        raise PointNotInVarietyError(f"point {p} is not a zero of {ideal}")
    local = ideal.local_basis(p)
    if staircase(local) is None:
        raise NonIsolatedSingularityError(f"point {p} is not isolated in the zero set of {ideal}")

    start = time.perf_counter()
    m_p = Ideal.maximal_at(p, ideal.ring)
    away = saturation(ideal, m_p)
    component = saturation(ideal, away)
    logger.debug(
        "primary_component_computed",
        point=str(p),
        n_generators=len(component),
        elapsed_ms=round((time.perf_counter() - start) * 1000, 2),
    )
    return component


# ==================== 素理想处的局部化 ====================


def localizes_to_prime(ideal: Ideal, prime: Ideal) -> bool:
    """I_p = p_p 是否成立

    等价于 I ⊆ p 且存在 s ∉ p 使 s·p ⊆ I，即 (I : p) ⊄ p。
    """
    _same_ring(ideal, prime)
    if not prime.contains_ideal(ideal):
        return False
    return not prime.contains_ideal(ideal_quotient(ideal, prime))


# ==================== 矩阵元素理想 ====================


def entries_ideal(matrix: SyzygyMatrix) -> Ideal:
    """合冲矩阵全部元素生成的理想"""
    return Ideal(matrix.entries(), matrix.ring)


# ==================== 局部极小生成元个数 ====================


def _truncated_coordinates(
    f: Polynomial,
    basis: Basis,
    cutoff: int,
    stairs_index: dict[Exponent, int],
) -> list[Fraction]:
    """f 在 R_m/K_m 中关于阶梯单项式的坐标（次数 ≥ cutoff 的项已属于 K_m）"""
    order = basis.order
    elements = basis.elements
    h = {e: c for e, c in f.terms.items() if sum(e) < cutoff}
    coords = [Fraction(0)] * len(stairs_index)
    while h:
        lm = order.leading(h)
        reducer = next((g for g in elements if divides(g.lm, lm)), None)
        if reducer is None:
            coords[stairs_index[lm]] += h.pop(lm)
            continue
        shift = tuple(a - b for a, b in zip(lm, reducer.lm))
        subtract_multiple(h, reducer.terms, shift, h[lm] / reducer.lc)
        for e in [e for e in h if sum(e) >= cutoff]:
            del h[e]
    return coords


def _local_rank(
    gens: Sequence[Polynomial],
    submodule: Sequence[Polynomial],
    ring: RingContext,
    order: MonomialOrder,
) -> int:
    """生成元在 R_m/K_m 中像的秩，K 由 submodule 生成（需局部有限维）"""
    if not gens:
        return 0
    basis = Ideal(submodule, ring).basis(order)
    stairs = staircase(basis)
    if stairs is None:
        raise NonIsolatedSingularityError(
            "local quotient is infinite-dimensional; the ideal is not primary at the point"
        )
    if not stairs:
        return 0
    cutoff = max(sum(e) for e in stairs) + 1
    index = {e: i for i, e in enumerate(stairs)}
    return matrix_rank([_truncated_coordinates(g, basis, cutoff, index) for g in gens])


def minimal_generators_local(ideal: Ideal, p: Point) -> int:
    """μ(I_m) = dim_k I_m / (m·I)_m

    平移到原点，求 m·I 的局部标准基，把每个生成元约化到有限阶梯单项式上做高斯消元。
    """
    if ideal.is_zero:
        return 0
    moved = ideal.translate(p)
    ring = moved.ring
    variables = [Polynomial.variable(ring, i) for i in range(ring.nvars)]
    product = [v * g for v in variables for g in moved.generators]
    return _local_rank(moved.generators, product, ring, NEGDEGREVLEX)


def relative_minimal_generators_local(top: Ideal, bottom: Ideal, p: Point) -> int:
    """μ((C/J)_m) = dim_k C_m / (m·C + J)_m，要求 J ⊆ C 且 J 在 p 处局部有限余维"""
    _same_ring(top, bottom)
    moved_top = top.translate(p)
    moved_bottom = bottom.translate(p)
    ring = moved_top.ring
    variables = [Polynomial.variable(ring, i) for i in range(ring.nvars)]
    submodule = [v * g for v in variables for g in moved_top.generators]
    submodule += list(moved_bottom.generators)
    return _local_rank(moved_top.generators, submodule, ring, NEGDEGREVLEX)


def fitting_ideal(matrix: SyzygyMatrix, j: int) -> Ideal:
    """表示矩阵的 (m-j) 阶子式生成的理想 Fitt_j"""
    size = matrix.nrows - j
    if size <= 0:
        return Ideal.unit(matrix.ring)
    if size > matrix.ncols:
        return Ideal.zero(matrix.ring)
    rows = matrix.rows()
    minors = []
    for row_idx in combinations(range(matrix.nrows), size):
        for col_idx in combinations(range(matrix.ncols), size):
            minor = determinant([[rows[i][k] for k in col_idx] for i in row_idx], matrix.ring)
            if not minor.is_zero:
                minors.append(minor)
    return Ideal(minors, matrix.ring)


def minimal_generators_at_prime(ideal: Ideal, prime: Ideal) -> int:
    """μ(I_p) = min{j : Fitt_j(I) ⊄ p}，p 不必是极大理想

    生成元的合冲矩阵就是 I 的表示矩阵。I 非零时秩为 1，Fitt_0 = 0。
    """
    _same_ring(ideal, prime)
    gens = [g for g in ideal.generators if not g.is_zero]
    if not gens:
        return 0
    matrix = syzygies(gens, ring=ideal.ring)
    for j in range(1, len(gens) + 1):
        fitting = fitting_ideal(matrix, j)
        if not prime.contains_ideal(fitting):
            logger.debug(
                "minimal_generators_at_prime",
                prime=str(prime),
                n_generators=len(gens),
                minimal=j,
            )
            return j
    return len(gens)
