"""对称代数与 Rees 代数的表示理想

对 I = (f_1, ..., f_m) ⊂ R，在 R[T_1, ..., T_m] 中：
- 对称代数：Sym(I) = R[T]/I_1([T]·φ)，φ 为 f 的合冲矩阵
- Rees 代数：R[f_1 t, ..., f_m t] = R[T]/K，K 由 (T_i - t·f_i) 消去 t 得到

零生成元在编号前去掉，T_i 对应第 i 个非零生成元。
"""

import time
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

import structlog

from src.core.constants import REES_VARIABLE, T_VARIABLE_PREFIX
from src.core.orders import DEGREVLEX, MonomialOrder
from src.core.polynomial import Polynomial, RingContext
from src.groebner.basis import Basis
from src.groebner.elimination import eliminate
from src.groebner.syzygy import SyzygyMatrix, syzygies
from src.ideals.ideal import Ideal
from src.ideals.operations import fresh_variable

logger = structlog.get_logger()


class PresentationKind(Enum):
    """表示理想的类型"""

    SYMMETRIC = "symmetric"
    REES = "rees"


def t_variable_names(ring: RingContext, m: int) -> list[str]:
    """T1..Tm，与环变量冲突时在前缀前加下划线"""
    prefix = T_VARIABLE_PREFIX
    while any(v.startswith(prefix) for v in ring.variables):
        prefix = "_" + prefix
    return [f"{prefix}{k}" for k in range(1, m + 1)]


@dataclass(frozen=True)
class PresentationIdeal:
    """R[T] 中的表示理想

    Attributes:
        base: 基环 R
        ring: R[T_1, ..., T_m]（T 变量在末尾）
        images: T_i 对应的生成元 f_i
        generators: 表示理想的生成元
        kind: 对称 / Rees
    """

    base: RingContext
    ring: RingContext
    images: tuple[Polynomial, ...]
    generators: tuple[Polynomial, ...]
    kind: PresentationKind

    def __post_init__(self) -> None:
        if self.kind is PresentationKind.SYMMETRIC:
            for g in self.generators:
                if self.t_degree(g) != 1 or not self.is_t_homogeneous(g):
                    raise ValueError(f"symmetric generator {g} is not of T-degree 1")

    @property
    def t_variables(self) -> tuple[str, ...]:
        return self.ring.variables[self.base.nvars :]

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def t_degrees(self, p: Polynomial) -> set[int]:
        n = self.base.nvars
        return {sum(exp[n:]) for exp in p.terms}

    def t_degree(self, p: Polynomial) -> int:
        """p 的 T 次数（各项 T 次数的最大值）"""
        return max(self.t_degrees(p), default=0)

    def is_t_homogeneous(self, p: Polynomial) -> bool:
        return len(self.t_degrees(p)) <= 1

    def degree_one_part(self) -> list[Polynomial]:
        """T 次数恰为 1 的生成元"""
        return [
            g for g in self.generators if self.t_degree(g) == 1 and self.is_t_homogeneous(g)
        ]

    def of_t_degree(self, d: int) -> list[Polynomial]:
        return [g for g in self.generators if self.t_degree(g) == d]

    def ideal(self) -> Ideal:
        return Ideal(self.generators, self.ring)

    def basis(self, order: MonomialOrder = DEGREVLEX) -> Basis:
        return self.ideal().basis(order)

    def contains(self, p: Polynomial) -> bool:
        return self.ideal().contains(p)

    def __str__(self) -> str:
        return ", ".join(str(g) for g in self.generators) or "0"


def presentation_ring(ideal: Ideal) -> RingContext:
    """R[T_1, ..., T_m]，m 为非零生成元个数"""
    m = len(ideal.generators)
    return ideal.ring.extend(t_variable_names(ideal.ring, m))


def linear_forms(matrix: SyzygyMatrix, ring: RingContext) -> list[Polynomial]:
    """[T_1 ... T_m]·φ 的各个分量"""
    base = matrix.ring
    t_vars = [Polynomial.variable(ring, v) for v in ring.variables[base.nvars :]]
    forms = []
    for column in matrix.columns:
        form = Polynomial.zero(ring)
        for c, t in zip(column, t_vars, strict=True):
            if not c.is_zero:
                form = form + c.embed(ring) * t
        if not form.is_zero:
            forms.append(form)
    return forms


def symmetric_ideal(ideal: Ideal) -> PresentationIdeal:
    """对称代数的表示理想 I_1([T]·φ)"""
    start = time.perf_counter()
    images = ideal.generators
    ring = presentation_ring(ideal)
    matrix = syzygies(images, DEGREVLEX, ideal.ring)
    generators = tuple(linear_forms(matrix, ring))
    logger.debug(
        "symmetric_ideal_computed",
        n_images=len(images),
        n_generators=len(generators),
        elapsed_ms=round((time.perf_counter() - start) * 1000, 2),
    )
    return PresentationIdeal(ideal.ring, ring, images, generators, PresentationKind.SYMMETRIC)


def rees_ideal(ideal: Ideal) -> PresentationIdeal:
    """Rees 代数的表示理想：(T_i - t·f_i) ∩ R[T]"""
    start = time.perf_counter()
    images = ideal.generators
    ring = presentation_ring(ideal)
    if not images:
        return PresentationIdeal(ideal.ring, ring, (), (), PresentationKind.REES)

    t_name = fresh_variable(ring, REES_VARIABLE)
    ext = ring.extend([t_name])
    t = Polynomial.variable(ext, t_name)
    t_vars = ring.variables[ideal.ring.nvars :]
    gens = [
        Polynomial.variable(ext, name) - t * f.embed(ext)
        for name, f in zip(t_vars, images, strict=True)
    ]
    kernel = [g.restrict(ring) for g in eliminate(gens, [t_name], ext)]
    logger.debug(
        "rees_ideal_computed",
        n_images=len(images),
        n_generators=len(kernel),
        elapsed_ms=round((time.perf_counter() - start) * 1000, 2),
    )
    return PresentationIdeal(ideal.ring, ring, images, tuple(kernel), PresentationKind.REES)


def substitute_images(p: Polynomial, presentation: PresentationIdeal) -> Polynomial:
    """T_i ↦ f_i；Rees 理想的元素映为零"""
    base = presentation.base
    n = base.nvars
    result = Polynomial.zero(base)
    for exp, c in p.terms.items():
        term = Polynomial.monomial(base, exp[:n], c)
        for f, e in zip(presentation.images, exp[n:], strict=True):
            if e:
                term = term * f**e
        result = result + term
    return result


def sorted_by_t_degree(
    presentation: PresentationIdeal, polys: Sequence[Polynomial]
) -> list[Polynomial]:
    """按 (T 次数, 总次数, 文本) 排序"""
    return sorted(polys, key=lambda p: (presentation.t_degree(p), p.total_degree(), str(p)))
