"""Buchberger 算法（全局序）

选对策略：normal strategy（lcm 次数最小者优先），sugar 打破平局；
用乘积判据与链判据剪枝。模序下只在同一分量内配对。
"""

import heapq
import time
from collections.abc import Sequence

import structlog

from src.core.config import get_engine_config
from src.core.errors import OrderKindError, ResourceLimitError, RingMismatchError
from src.core.orders import DEGREVLEX, MonomialOrder
from src.core.polynomial import Polynomial, RingContext
from src.groebner.basis import Basis, BasisKind, is_groebner, sort_generators
from src.groebner.kernel import (
    Element,
    Terms,
    coprime,
    divides,
    lcm_exponent,
    monic,
    mora_reduce,
    reduce_full,
    s_polynomial,
    s_sugar,
)

logger = structlog.get_logger()


def common_ring(gens: Sequence[Polynomial], ring: RingContext | None = None) -> RingContext:
    """所有生成元所在的公共环"""
    rings = {g.ring for g in gens}
    if ring is not None:
        rings.add(ring)
    if len(rings) > 1:
        raise RingMismatchError(f"generators live in different rings: {sorted(map(str, rings))}")
    if not rings:
        raise ValueError("cannot infer the ring of an empty generator list")
    return rings.pop()


class _PairQueue:
    """S 对队列：记录尚未处理的对，供链判据查询"""

    def __init__(self) -> None:
        self._heap: list[tuple[int, int, int, int]] = []
        self.pending: set[tuple[int, int]] = set()

    def push(self, i: int, j: int, elements: list[Element]) -> None:
        lcm = lcm_exponent(elements[i].lm, elements[j].lm)
        sugar = s_sugar(elements[i], elements[j])
        heapq.heappush(self._heap, (sum(lcm), sugar, i, j))
        self.pending.add((i, j))

    def pop(self) -> tuple[int, int]:
        _, _, i, j = heapq.heappop(self._heap)
        self.pending.discard((i, j))
        return i, j

    def __bool__(self) -> bool:
        return bool(self._heap)


def _chain_criterion(
    i: int, j: int, elements: list[Element], pending: set[tuple[int, int]]
) -> bool:
    """存在 k 使 lm_k | lcm(i,j)，且 (i,k)、(j,k) 都已处理"""
    lcm = lcm_exponent(elements[i].lm, elements[j].lm)
    for k, e in enumerate(elements):
        if k in (i, j) or e.component != elements[i].component:
            continue
        if not divides(e.lm, lcm):
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        return True
    return False


def _add_element(
    h: Terms,
    elements: list[Element],
    queue: _PairQueue,
    order: MonomialOrder,
    sugar: int | None = None,
) -> None:
    elem = Element(h, order, sugar)
    elem.terms = monic(h, elem.lc)
    elem.lc = elem.terms[elem.lm]
    k = len(elements)
    elements.append(elem)
    for i in range(k):
        other = elements[i]
        if other.component != elem.component:
            continue
        if elem.component is None and coprime(other.lm, elem.lm):
            continue  # 乘积判据
        queue.push(i, k, elements)


def buchberger(
    polys: list[Terms],
    order: MonomialOrder,
    ring: RingContext,
) -> list[Element]:
    """返回生成同一理想的基（未约化）

    全局序用完全约化并启用链判据；局部序（Mora）用弱正规形式，只用乘积判据。
    """
    cap = get_engine_config().max_pairs
    zero = ring.zero_exponent()
    local = order.is_local
    reduce = mora_reduce if local else reduce_full
    elements: list[Element] = []
    queue = _PairQueue()

    for p in polys:
        h = reduce(p, elements, order)
        if h:
            _add_element(h, elements, queue, order)
            if elements[-1].lm == zero:
                return [elements[-1]]

    processed = 0
    while queue:
        i, j = queue.pop()
        if not local and _chain_criterion(i, j, elements, queue.pending):
            continue
        processed += 1
        if processed > cap:
            raise ResourceLimitError("max_pairs", processed, cap)
        s = s_polynomial(elements[i], elements[j])
        h = reduce(s, elements, order)
        if h:
            sugar = max(s_sugar(elements[i], elements[j]), max(sum(e) for e in h))
            _add_element(h, elements, queue, order, sugar)
            if elements[-1].lm == zero:
                return [elements[-1]]
    return elements


def interreduce(elements: list[Element], order: MonomialOrder) -> list[Terms]:
    """极小化并约化尾项，得到约化 Gröbner 基（首一）"""
    minimal: list[Element] = []
    for idx, e in enumerate(elements):
        redundant = False
        for jdx, other in enumerate(elements):
            if jdx == idx or not divides(other.lm, e.lm):
                continue
            if other.lm != e.lm or jdx < idx:
                redundant = True
                break
        if not redundant:
            minimal.append(e)

    reduced: list[Terms] = []
    for idx, e in enumerate(minimal):
        others = [o for jdx, o in enumerate(minimal) if jdx != idx]
        r = reduce_full(e.terms, others, order)
        reduced.append(monic(r, r[e.lm]))
    return reduced


def groebner_basis(
    gens: Sequence[Polynomial],
    order: MonomialOrder = DEGREVLEX,
    ring: RingContext | None = None,
) -> Basis:
    """约化 Gröbner 基

    Args:
        gens: 生成元
        order: 全局单项式序
        ring: 生成元为空时用于指定环

    Returns:
        Basis: 约化基（首一、互约化、按首项降序），对同一理想唯一
    """
    if order.is_local:
        raise OrderKindError(f"{order!r} is local; use standard_basis")
    ring = common_ring(gens, ring)
    polys = [dict(g.terms) for g in gens if not g.is_zero]

    start = time.perf_counter()
    elements = buchberger(polys, order, ring)
    reduced = interreduce(elements, order)
    generators = sort_generators([Polynomial._trusted(ring, t) for t in reduced], order)
    basis = Basis(ring, generators, order, reduced=True, kind=BasisKind.GROEBNER)

    logger.debug(
        "groebner_basis_computed",
        order=order.name,
        n_input=len(polys),
        n_basis=len(generators),
        elapsed_ms=round((time.perf_counter() - start) * 1000, 2),
    )

    if get_engine_config().verify_bases and not is_groebner(basis):
        raise AssertionError(f"basis failed the S-polynomial check: {generators}")
    return basis
