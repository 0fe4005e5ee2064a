"""拟齐次性检测

寻找正权 r 使得支撑集上 ⟨a, r⟩ = d 恒成立。可行权向量（归一化 d = 1）构成多面体，
枚举其顶点并取平均：平均值严格为正当且仅当存在严格为正的权。
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

import structlog

from src.core.calculus import euler_sum, gradient, weighted_initial_part
from src.core.errors import InternalConsistencyError
from src.core.orders import NEGDEGREVLEX, Exponent
from src.core.polynomial import Polynomial
from src.core.symbolic import solve_unique
from src.groebner.dimension import staircase
from src.ideals.ideal import Ideal

logger = structlog.get_logger()


@dataclass(frozen=True)
class QuasiHomogeneousWeights:
    """整数权 (r_1, ..., r_n) 与加权次数 d，gcd 为 1"""

    weights: tuple[int, ...]
    degree: int

    @property
    def normalized(self) -> tuple[Fraction, ...]:
        """r_i / d，满足 f = Σ (r_i/d) x_i ∂f/∂x_i"""
        return tuple(Fraction(r, self.degree) for r in self.weights)


def _integral(vector: list[Fraction]) -> tuple[int, ...]:
    scale = lcm(*(c.denominator for c in vector))
    ints = [int(c * scale) for c in vector]
    common = gcd(*ints)
    return tuple(i // common for i in ints)


def _vertices(support: list[Exponent], columns: list[int]) -> list[list[Fraction]]:
    """{r ≥ 0 : ⟨a, r⟩ = 1 (a ∈ support)} 在给定坐标上的顶点"""
    vertices: list[list[Fraction]] = []
    for size in range(1, len(columns) + 1):
        for chosen in combinations(columns, size):
            rows = [[Fraction(a[j]) for j in chosen] for a in support]
            solution = solve_unique(rows, [Fraction(1)] * len(support))
            if solution is None or any(c <= 0 for c in solution):
                continue
            vertex = [Fraction(0)] * len(columns)
            for j, c in zip(chosen, solution):
                vertex[columns.index(j)] = c
            if vertex not in vertices:
                vertices.append(vertex)
    return vertices


def _positive_solution(support: list[Exponent], columns: list[int]) -> list[Fraction] | None:
    vertices = _vertices(support, columns)
    if not vertices:
        return None
    mean = [sum(col, Fraction(0)) / len(vertices) for col in zip(*vertices)]
    if any(c <= 0 for c in mean):
        return None
    return mean


def quasi_homogeneous_weights(f: Polynomial) -> QuasiHomogeneousWeights | None:
    """f 拟齐次时返回一组正整数权与次数；齐次多项式返回全 1 权

    f 中不出现的变量取出现变量的最小权。
    """
    if f.is_zero:
        raise ValueError("quasi_homogeneous_weights of the zero polynomial is undefined")
    if f.is_constant:
        return None
    n = f.ring.nvars
    if f.is_homogeneous():
        return QuasiHomogeneousWeights((1,) * n, f.total_degree())

    support = list(f.terms)
    present = [i for i in range(n) if any(a[i] for a in support)]
    solution = _positive_solution(support, present)
    if solution is None:
        return None

    by_var = dict(zip(present, solution))
    floor = min(solution)
    rational = [by_var.get(i, floor) for i in range(n)]
    # d = 1 的归一化下，整数化的比例因子就是次数
    weights = _integral(rational)
    degree = sum(a * w for a, w in zip(support[0], weights))

    result = QuasiHomogeneousWeights(weights, degree)
    if euler_sum(f, result.normalized) != f:
        raise InternalConsistencyError(f"weights {weights} fail the Euler relation for {f}")
    return result


# ==================== 半拟齐次 ====================


@dataclass(frozen=True)
class SemiQuasiHomogeneousPart:
    """f = F + G：F 为拟齐次初始部分（孤立奇点），G 的加权阶更高"""

    initial: Polynomial
    degree: int
    weights: tuple[int, ...]


def _candidate_weights(f: Polynomial) -> list[tuple[int, ...]]:
    """由支撑集的 n 元子集确定的正权（Newton 多面体的紧面）"""
    n = f.ring.nvars
    support = sorted(f.terms)
    found: set[tuple[int, ...]] = set()
    for chosen in combinations(support, n):
        rows = [[Fraction(e) for e in a] for a in chosen]
        solution = solve_unique(rows, [Fraction(1)] * n)
        if solution is None or any(c <= 0 for c in solution):
            continue
        # 其余单项式的加权次数都不能低于该面
        if any(sum(c * e for c, e in zip(solution, a)) < 1 for a in support):
            continue
        found.add(_integral(solution))
    return sorted(found)


def semiquasi_homogeneous_part(f: Polynomial) -> SemiQuasiHomogeneousPart | None:
    """在原点处检测半拟齐次分解；初始部分须在原点有孤立奇点"""
    if f.is_zero or f.is_constant:
        return None
    for weights in _candidate_weights(f):
        initial, d = weighted_initial_part(f, weights)
        basis = Ideal(gradient(initial), f.ring).basis(NEGDEGREVLEX)
        if staircase(basis) is None:
            continue
        logger.debug("semiquasi_part_found", weights=weights, degree=d)
        return SemiQuasiHomogeneousPart(initial, d, weights)
    return None
