"""按序类型选择算法，理想成员与相等判定"""

from collections.abc import Sequence

from src.core.orders import DEGREVLEX, MonomialOrder
from src.core.polynomial import Polynomial, RingContext
from src.groebner.basis import Basis
from src.groebner.buchberger import common_ring, groebner_basis
from src.groebner.mora import standard_basis


def compute_basis(
    gens: Sequence[Polynomial],
    order: MonomialOrder = DEGREVLEX,
    ring: RingContext | None = None,
) -> Basis:
    """全局序用 Buchberger，局部序用 Mora"""
    if order.is_local:
        return standard_basis(gens, order, ring)
    return groebner_basis(gens, order, ring)


def contains_all(basis: Basis, polys: Sequence[Polynomial]) -> bool:
    return all(basis.contains(p) for p in polys)


def ideal_equal(
    a: Sequence[Polynomial],
    b: Sequence[Polynomial],
    order: MonomialOrder = DEGREVLEX,
    ring: RingContext | None = None,
) -> bool:
    """两个理想是否相等（局部序下为局部化后相等）

    互相用对方的基做正规形式约化。
    """
    ring = common_ring([*a, *b], ring)
    basis_a = compute_basis(a, order, ring)
    basis_b = compute_basis(b, order, ring)
    return contains_all(basis_a, b) and contains_all(basis_b, a)
