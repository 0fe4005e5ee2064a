"""点处的局部不变量

所有函数都在仿射坐标下工作：先把点平移到原点，再用局部序（负分次反字典序）的标准基计数。
"""

import structlog

from src.core.calculus import gradient, initial_degree, translate_to_origin
from src.core.config import get_engine_config
from src.core.errors import (
    InternalConsistencyError,
    NonIsolatedSingularityError,
    NotOnHypersurfaceError,
)
from src.core.orders import NEGDEGREVLEX
from src.core.polynomial import Polynomial
from src.core.types import Point
from src.groebner.dimension import staircase
from src.ideals.ideal import Ideal
from src.ideals.operations import (
    ideal_quotient,
    minimal_generators_local,
    primary_component_at_point,
    relative_minimal_generators_local,
)

logger = structlog.get_logger()


# ==================== 梯度理想与 Jacobian 理想 ====================


def gradient_ideal(f: Polynomial) -> Ideal:
    """J(f)：全部一阶偏导生成的理想"""
    return Ideal(gradient(f), f.ring)


def jacobian_ideal(f: Polynomial) -> Ideal:
    """I(f) = (f) + J(f)"""
    return Ideal([f, *gradient(f)], f.ring)


# ==================== 重数 ====================


def multiplicity(f: Polynomial, p: Point) -> int:
    g = translate_to_origin(f, p)
    if g.constant_term:
        raise NotOnHypersurfaceError(f"point {p} is not on V({f})")
    return initial_degree(g)


# ==================== Milnor / Tjurina ====================


def local_length(ideal: Ideal, p: Point) -> int:
    """dim_k (R/I)_{m_p}；无限时抛出 NonIsolatedSingularityError"""
    stairs = staircase(ideal.local_basis(p, NEGDEGREVLEX))
    if stairs is None:
        raise NonIsolatedSingularityError(f"{ideal} has infinite local length at {p}")
    length = len(stairs)
    if length and get_engine_config().cross_check_oracles:
        oracle = primary_component_at_point(ideal, p).quotient_dimension()
        if oracle != length:
            raise InternalConsistencyError(
                f"local length at {p}: staircase gives {length}, primary component gives {oracle}"
            )
        logger.debug("local_length_cross_checked", point=str(p), length=length)
    return length


def milnor_number(f: Polynomial, p: Point) -> int:
    """μ_p(f) = dim_k R_m / J(f)_m"""
    return local_length(gradient_ideal(f), p)


def tjurina_number(f: Polynomial, p: Point) -> int:
    """τ_p(f) = dim_k R_m / I(f)_m"""
    return local_length(jacobian_ideal(f), p)


# ==================== Euler 性与 socle ====================


def is_locally_eulerian(f: Polynomial, p: Point) -> bool:
    """f ∈ J(f)_m：平移后 f 对梯度的局部标准基的 Mora 正规形式为零"""
    g = translate_to_origin(f, p)
    basis = gradient_ideal(g).basis(NEGDEGREVLEX)
    eulerian = basis.contains(g)
    if get_engine_config().cross_check_oracles:
        mu, tau = milnor_number(f, p), tjurina_number(f, p)
        if eulerian != (mu == tau):
            raise InternalConsistencyError(
                f"membership says eulerian={eulerian} but mu={mu}, tau={tau} at {p}"
            )
    return eulerian


def socle_module_cyclic(f: Polynomial, p: Point) -> bool:
    """(J(f) : f) / J(f) 在 p 处局部至多由一个元素生成"""
    jac = gradient_ideal(f)
    colon = ideal_quotient(jac, Ideal([f], f.ring))
    count = relative_minimal_generators_local(colon, jac, p)
    logger.debug("socle_generators", point=str(p), count=count)
    return count <= 1


def is_local_complete_intersection(f: Polynomial, p: Point) -> bool:
    """I(f) 在 p 处由 n 个元素生成（n 为变量个数）"""
    return minimal_generators_local(jacobian_ideal(f), p) <= f.ring.nvars
