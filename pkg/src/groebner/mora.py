"""Mora 切锥算法（局部序标准基）"""

import time
from collections.abc import Sequence

import structlog

from src.core.config import get_engine_config
from src.core.errors import OrderKindError
from src.core.orders import NEGDEGREVLEX, MonomialOrder
from src.core.polynomial import Polynomial, RingContext
from src.groebner.basis import Basis, BasisKind, is_groebner, sort_generators
from src.groebner.buchberger import buchberger, common_ring
from src.groebner.kernel import divides

logger = structlog.get_logger()


def standard_basis(
    gens: Sequence[Polynomial],
    order: MonomialOrder = NEGDEGREVLEX,
    ring: RingContext | None = None,
) -> Basis:
    """局部序下的标准基

    结果的首项理想等于局部环中理想的首项理想。只做极小化（去掉首项可被其他首项
    整除的元素），尾项不约化，reduced=False。
    """
    if not order.is_local:
        raise OrderKindError(f"{order!r} is global; use groebner_basis")
    ring = common_ring(gens, ring)
    polys = [dict(g.terms) for g in gens if not g.is_zero]

    start = time.perf_counter()
    elements = buchberger(polys, order, ring)

    kept = []
    for idx, e in enumerate(elements):
        if any(
            jdx != idx and divides(o.lm, e.lm) and (o.lm != e.lm or jdx < idx)
            for jdx, o in enumerate(elements)
        ):
            continue
        kept.append(Polynomial._trusted(ring, e.terms))
    generators = sort_generators(kept, order)
    basis = Basis(ring, generators, order, reduced=False, kind=BasisKind.STANDARD)

    logger.debug(
        "standard_basis_computed",
        order=order.name,
        n_input=len(polys),
        n_basis=len(generators),
        elapsed_ms=round((time.perf_counter() - start) * 1000, 2),
    )

    if get_engine_config().verify_bases and not is_groebner(basis):
        raise AssertionError(f"standard basis failed the S-polynomial check: {generators}")
    return basis
