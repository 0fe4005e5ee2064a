"""Gröbner 基 / 标准基的数据类型与正规形式"""

from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from src.core.errors import RingMismatchError
from src.core.orders import Exponent, MonomialOrder
from src.core.polynomial import Polynomial, RingContext
from src.groebner.kernel import Element, mora_reduce, reduce_full, s_polynomial


class BasisKind(Enum):
    GROEBNER = "groebner"  # 全局序，Buchberger
    STANDARD = "standard"  # 局部序，Mora


@dataclass(frozen=True)
class Basis:
    """理想的 Gröbner 基或标准基（不可变）"""

    ring: RingContext
    generators: tuple[Polynomial, ...]
    order: MonomialOrder
    reduced: bool
    kind: BasisKind
    _elements: list[Element] = field(default_factory=list, compare=False, repr=False)

    def __post_init__(self) -> None:
        for g in self.generators:
            if g.ring != self.ring:
                raise RingMismatchError(f"basis element {g} not in ring ({self.ring})")
        if not self._elements:
            self._elements.extend(Element(dict(g.terms), self.order) for g in self.generators)

    @property
    def elements(self) -> list[Element]:
        return self._elements

    def leading_monomials(self) -> list[Exponent]:
        return [e.lm for e in self._elements]

    @property
    def is_unit(self) -> bool:
        """理想（或其局部化）是否为单位理想"""
        zero = self.ring.zero_exponent()
        return any(e.lm == zero for e in self._elements)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):  # type: ignore[no-untyped-def]
        return iter(self.generators)


def normal_form(f: Polynomial, basis: Basis) -> Polynomial:
    """正规形式

    全局序：完全约化后的余式（余式为零当且仅当 f 属于理想）。
    局部序：Mora 弱正规形式 r，满足 u·f - r 属于理想（u 为局部环中的单位），
    r = 0 当且仅当 f 属于局部化后的理想。
    """
    if f.ring != basis.ring:
        raise RingMismatchError(f"{f} not in ring ({basis.ring})")
    if f.is_zero:
        return f
    if basis.order.is_local:
        terms = mora_reduce(dict(f.terms), basis.elements, basis.order)
    else:
        terms = reduce_full(dict(f.terms), basis.elements, basis.order)
    return Polynomial._trusted(basis.ring, terms)


def is_groebner(basis: Basis) -> bool:
    """检查所有 S 多项式约化为零（Buchberger 判据）"""
    elements = basis.elements
    reduce = mora_reduce if basis.order.is_local else reduce_full
    for f, g in combinations(elements, 2):
        if f.component != g.component:
            continue
        if reduce(s_polynomial(f, g), elements, basis.order):
            return False
    return True


def sort_generators(gens: Sequence[Polynomial], order: MonomialOrder) -> tuple[Polynomial, ...]:
    """按首单项式降序排列"""
    return tuple(sorted(gens, key=lambda g: order.key(g.leading_monomial(order)), reverse=True))
