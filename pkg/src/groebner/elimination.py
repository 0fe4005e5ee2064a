"""消元理想"""

from collections.abc import Iterable, Sequence

import structlog

from src.core.orders import DEGREVLEX, BlockOrder
from src.core.polynomial import Polynomial, RingContext
from src.groebner.buchberger import common_ring, groebner_basis

logger = structlog.get_logger()


def variable_indices(ring: RingContext, variables: Iterable[str | int]) -> list[int]:
    """变量名或下标统一转为下标"""
    return sorted({ring.index(v) if isinstance(v, str) else v for v in variables})


def eliminate(
    gens: Sequence[Polynomial],
    variables: Iterable[str | int],
    ring: RingContext | None = None,
) -> list[Polynomial]:
    """I ∩ k[其余变量] 的生成元

    用块序（消元变量块在前，块内 degrevlex）求 Gröbner 基，保留不含消元变量的元素。
    结果仍位于原环中；需要时用 Polynomial.restrict 投影到子环。
    """
    ring = common_ring(gens, ring)
    elim = variable_indices(ring, variables)
    if not elim:
        return list(groebner_basis(gens, DEGREVLEX, ring).generators)

    order = BlockOrder(elim, ring.nvars)
    basis = groebner_basis(gens, order, ring)
    result = [g for g in basis.generators if not any(g.involves(i) for i in elim)]
    logger.debug(
        "elimination_done",
        eliminated=[ring.variables[i] for i in elim],
        n_basis=len(basis),
        n_result=len(result),
    )
    return result
