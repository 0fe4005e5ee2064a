"""一阶合冲模

标签列方法：在基环上添加分量标记变量 e0, e1, ..., em，对向量
v_i = g_i·e0 + e_i 在 POT 模序（e0 分量最大）下求 Gröbner 基；
不含 e0 分量的基元素恰好生成合冲模。
"""

import time
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import structlog

from src.core.constants import COMPONENT_PREFIX
from src.core.orders import DEGREVLEX, Exponent, ModuleOrder, MonomialOrder
from src.core.polynomial import Polynomial, RingContext
from src.groebner.basis import Basis
from src.groebner.buchberger import common_ring, groebner_basis

logger = structlog.get_logger()

Column = tuple[Polynomial, ...]


@dataclass(frozen=True)
class SyzygyMatrix:
    """合冲矩阵：每列是一个合冲，每行对应一个输入生成元"""

    ring: RingContext
    generators: tuple[Polynomial, ...]
    columns: tuple[Column, ...]

    @property
    def nrows(self) -> int:
        return len(self.generators)

    @property
    def ncols(self) -> int:
        return len(self.columns)

    def entry(self, row: int, col: int) -> Polynomial:
        return self.columns[col][row]

    def rows(self) -> list[list[Polynomial]]:
        return [[c[i] for c in self.columns] for i in range(self.nrows)]

    def entries(self) -> list[Polynomial]:
        """全部非零元素（去重，保持出现顺序）"""
        seen: dict[Polynomial, None] = {}
        for col in self.columns:
            for p in col:
                if not p.is_zero:
                    seen.setdefault(p, None)
        return list(seen)

    def annihilates(self, column: Sequence[Polynomial]) -> bool:
        """Σ c_i·g_i 是否恒为零"""
        total = Polynomial.zero(self.ring)
        for c, g in zip(column, self.generators, strict=True):
            total = total + c * g
        return total.is_zero

    def verify(self) -> bool:
        return all(self.annihilates(col) for col in self.columns)

    def degrees(self) -> list[int | None]:
        """齐次列的次数 deg(c_i) + deg(g_i)；非齐次或零列为 None"""
        return [column_degree(col, self.generators) for col in self.columns]

    def __str__(self) -> str:
        return "\n".join(
            "[" + ", ".join(str(p) for p in row) + "]" for row in self.rows()
        )


def column_degree(column: Sequence[Polynomial], generators: Sequence[Polynomial]) -> int | None:
    degrees = set()
    for c, g in zip(column, generators, strict=True):
        if c.is_zero:
            continue
        if g.is_zero or not c.is_homogeneous() or not g.is_homogeneous():
            return None
        degrees.add(c.total_degree() + g.total_degree())
    return degrees.pop() if len(degrees) == 1 else None


def component_names(ring: RingContext, count: int) -> list[str]:
    """挑选与环变量不冲突的分量变量名"""
    prefix = COMPONENT_PREFIX
    while any(v.startswith(prefix) for v in ring.variables):
        prefix = "_" + prefix
    return [f"{prefix}{k}" for k in range(count)]


def _unit(k: int, size: int) -> Exponent:
    return tuple(1 if j == k else 0 for j in range(size))


def _vector_terms(entries: Sequence[Polynomial], n_components: int) -> dict[Exponent, Fraction]:
    """Σ_j entries[j]·e_j 的项表（基环指数后接分量指数）"""
    terms: dict[Exponent, Fraction] = {}
    for j, p in enumerate(entries):
        tag = _unit(j, n_components)
        for exp, c in p.terms.items():
            terms[exp + tag] = c
    return terms


def _split_vector(
    p: Polynomial, ring: RingContext, n_components: int
) -> list[Polynomial]:
    """把模元素拆回各分量上的多项式"""
    n = ring.nvars
    parts: list[dict[Exponent, Fraction]] = [{} for _ in range(n_components)]
    for exp, c in p.terms.items():
        k = next(i for i in range(n_components) if exp[n + i])
        parts[k][exp[:n]] = c
    return [Polynomial._trusted(ring, t) for t in parts]


def module_basis(
    vectors: Sequence[Sequence[Polynomial]],
    ring: RingContext,
    order: MonomialOrder = DEGREVLEX,
) -> tuple[Basis, RingContext]:
    """子模 <vectors> ⊆ R^k 的 Gröbner 基，返回 (basis, ext_ring)"""
    k = len(vectors[0]) if vectors else 0
    ext = ring.extend(component_names(ring, k))
    morder = ModuleOrder(order, ring.nvars, k, position="pot")
    polys = [Polynomial._trusted(ext, _vector_terms(v, k)) for v in vectors]
    return groebner_basis(polys, morder, ext), ext


def module_contains(
    vectors: Sequence[Sequence[Polynomial]],
    candidate: Sequence[Polynomial],
    order: MonomialOrder = DEGREVLEX,
) -> bool:
    """candidate 是否属于 vectors 生成的子模"""
    if all(p.is_zero for p in candidate):
        return True
    ring = candidate[0].ring
    nonzero = [v for v in vectors if any(not p.is_zero for p in v)]
    if not nonzero:
        return False
    basis, ext = module_basis(nonzero, ring, order)
    vec = Polynomial._trusted(ext, _vector_terms(candidate, len(candidate)))
    return basis.contains(vec)


def _minimalize(columns: list[Column], generators: Sequence[Polynomial]) -> list[Column]:
    degrees = [column_degree(c, generators) for c in columns]
    homogeneous = (
        all(not g.is_zero and g.is_homogeneous() for g in generators)
        and all(d is not None for d in degrees)
    )
    if homogeneous:
        # 按次数递增，保留不在已保留列生成的子模中的列
        ranked = sorted(range(len(columns)), key=lambda i: degrees[i] or 0)
        kept: list[Column] = []
        for i in ranked:
            if not kept or not module_contains(kept, columns[i]):
                kept.append(columns[i])
        return kept

    # 非齐次：逐列删去可由其余列生成者
    kept = list(columns)
    for col in reversed(columns):
        others = [c for c in kept if c is not col]
        if others and module_contains(others, col):
            kept = others
    return kept


def syzygies(
    gens: Sequence[Polynomial],
    order: MonomialOrder = DEGREVLEX,
    ring: RingContext | None = None,
    minimal: bool = True,
) -> SyzygyMatrix:
    """生成元列表的一阶合冲模

    Args:
        gens: 生成元（允许零多项式，对应列 e_i）
        order: 基环上的全局序
        minimal: 是否极小化（齐次输入得到极小齐次生成组）

    Returns:
        SyzygyMatrix: 每列满足 Σ c_i·g_i = 0，所有列生成整个合冲模
    """
    ring = common_ring(gens, ring)
    m = len(gens)
    start = time.perf_counter()
    if m == 0:
        return SyzygyMatrix(ring, (), ())

    ext = ring.extend(component_names(ring, m + 1))
    morder = ModuleOrder(order, ring.nvars, m + 1, position="pot")
    vectors = []
    for i, g in enumerate(gens):
        entries = [g] + [
            Polynomial.constant(ring, 1) if j == i else Polynomial.zero(ring) for j in range(m)
        ]
        vectors.append(Polynomial._trusted(ext, _vector_terms(entries, m + 1)))

    basis = groebner_basis(vectors, morder, ext)
    columns: list[Column] = []
    for element in basis.generators:
        parts = _split_vector(element, ring, m + 1)
        if parts[0].is_zero:
            columns.append(tuple(parts[1:]))

    if minimal and len(columns) > 1:
        columns = _minimalize(columns, gens)

    logger.debug(
        "syzygies_computed",
        n_generators=m,
        n_columns=len(columns),
        elapsed_ms=round((time.perf_counter() - start) * 1000, 2),
    )
    return SyzygyMatrix(ring, tuple(gens), tuple(columns))
