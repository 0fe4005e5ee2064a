"""理想：生成元列表 + 按单项式序缓存的基"""

import threading
from collections.abc import Iterable, Iterator

from src.core.calculus import translate_to_origin
from src.core.errors import RingMismatchError
from src.core.orders import DEGREVLEX, NEGDEGREVLEX, MonomialOrder
from src.core.polynomial import Polynomial, RingContext
from src.core.types import Point
from src.groebner.basis import Basis
from src.groebner.dimension import krull_dimension, quotient_k_dimension
from src.groebner.membership import compute_basis


class Ideal:
    """多项式环中的理想

    生成元去零、去重（保持首次出现的顺序）。基按序惰性计算并缓存；
    缓存的填充加锁，重复计算的结果相同。
    """

    def __init__(self, generators: Iterable[Polynomial], ring: RingContext | None = None):
        gens: list[Polynomial] = []
        seen: set[Polynomial] = set()
        for g in generators:
            if ring is None:
                ring = g.ring
            elif g.ring != ring:
                raise RingMismatchError(f"generator {g} not in ring ({ring})")
            if g.is_zero or g in seen:
                continue
            seen.add(g)
            gens.append(g)
        if ring is None:
            raise ValueError("an ideal without generators needs an explicit ring")
        self._ring = ring
        self._generators = tuple(gens)
        self._cache: dict[MonomialOrder, Basis] = {}
        self._lock = threading.Lock()

    # ==================== 构造 ====================

    @classmethod
    def zero(cls, ring: RingContext) -> "Ideal":
        return cls([], ring)

    @classmethod
    def unit(cls, ring: RingContext) -> "Ideal":
        return cls([Polynomial.constant(ring, 1)], ring)

    @classmethod
    def maximal_at(cls, p: Point, ring: RingContext) -> "Ideal":
        """m_p = (x_1 - p_1, ..., x_n - p_n)"""
        if p.projective or len(p.coordinates) != ring.nvars:
            raise ValueError(f"point {p} is not an affine point of ({ring})")
        return cls(
            [Polynomial.variable(ring, i) - c for i, c in enumerate(p.coordinates)],
            ring,
        )

    @classmethod
    def from_basis(cls, basis: Basis) -> "Ideal":
        """由全局基构造（局部标准基只在局部化中生成理想）"""
        if basis.order.is_local:
            raise ValueError("a local standard basis does not generate the global ideal")
        ideal = cls(basis.generators, basis.ring)
        ideal._cache[basis.order] = basis
        return ideal

    # ==================== 访问 ====================

    @property
    def ring(self) -> RingContext:
        return self._ring

    @property
    def generators(self) -> tuple[Polynomial, ...]:
        return self._generators

    @property
    def is_zero(self) -> bool:
        return not self._generators

    def basis(self, order: MonomialOrder = DEGREVLEX) -> Basis:
        """该序下的基（全局序为约化 Gröbner 基，局部序为标准基）"""
        with self._lock:
            cached = self._cache.get(order)
            if cached is None:
                cached = compute_basis(self._generators, order, self._ring)
                self._cache[order] = cached
            return cached

    def cached_orders(self) -> list[MonomialOrder]:
        with self._lock:
            return list(self._cache)

    def is_unit(self, order: MonomialOrder = DEGREVLEX) -> bool:
        return self.basis(order).is_unit

    def contains(self, f: Polynomial, order: MonomialOrder = DEGREVLEX) -> bool:
        return self.basis(order).contains(f)

    def contains_ideal(self, other: "Ideal", order: MonomialOrder = DEGREVLEX) -> bool:
        self._check_ring(other)
        basis = self.basis(order)
        return all(basis.contains(g) for g in other.generators)

    def same_as(self, other: "Ideal", order: MonomialOrder = DEGREVLEX) -> bool:
        """作为理想相等（局部序下为局部化后相等）"""
        return self.contains_ideal(other, order) and other.contains_ideal(self, order)

    def dimension(self) -> int:
        return krull_dimension(self._generators, self._ring)

    def quotient_dimension(self, order: MonomialOrder = DEGREVLEX) -> int | float:
        return quotient_k_dimension(self.basis(order))

    # ==================== 运算 ====================

    def _check_ring(self, other: "Ideal") -> None:
        if other.ring != self._ring:
            raise RingMismatchError(f"ring mismatch: ({self._ring}) vs ({other.ring})")

    def __add__(self, other: "Ideal") -> "Ideal":
        self._check_ring(other)
        return Ideal([*self._generators, *other.generators], self._ring)

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._check_ring(other)
        return Ideal([a * b for a in self._generators for b in other.generators], self._ring)

    def power(self, n: int) -> "Ideal":
        result = Ideal.unit(self._ring)
        for _ in range(n):
            result = result * self
        return result

    def with_generators(self, extra: Iterable[Polynomial]) -> "Ideal":
        return Ideal([*self._generators, *extra], self._ring)

    def translate(self, p: Point) -> "Ideal":
        """把点 p 平移到原点"""
        return Ideal([translate_to_origin(g, p) for g in self._generators], self._ring)

    def local_basis(self, p: Point, order: MonomialOrder = NEGDEGREVLEX) -> Basis:
        """在 p 处的局部标准基（先平移到原点）"""
        return self.translate(p).basis(order)

    def embed(self, target: RingContext) -> "Ideal":
        return Ideal([g.embed(target) for g in self._generators], target)

    def reduced(self, order: MonomialOrder = DEGREVLEX) -> "Ideal":
        """以约化基为生成元的同一理想"""
        return Ideal.from_basis(self.basis(order))

    def __len__(self) -> int:
        return len(self._generators)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self._generators)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self._generators) + ")"

    def __repr__(self) -> str:
        return f"Ideal{self}"
