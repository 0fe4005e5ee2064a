"""首项理想的组合不变量：Krull 维数、阶梯（staircase）、商空间维数"""

import math
from collections import deque
from collections.abc import Sequence
from itertools import combinations

from src.core.orders import DEGREVLEX, Exponent
from src.core.polynomial import Polynomial, RingContext
from src.groebner.basis import Basis
from src.groebner.buchberger import common_ring, groebner_basis
from src.groebner.kernel import divides

# 商空间无限维
INFINITE = math.inf


def krull_dimension(gens: Sequence[Polynomial], ring: RingContext | None = None) -> int:
    """R/I 的 Krull 维数；单位理想返回 -1

    等于首项理想的最大独立变量集大小：集合 S 独立当且仅当没有首单项式只含 S 中的变量。
    """
    ring = common_ring(gens, ring)
    basis = groebner_basis(gens, DEGREVLEX, ring)
    if basis.is_unit:
        return -1
    supports = [frozenset(i for i, e in enumerate(lm) if e) for lm in basis.leading_monomials()]
    n = ring.nvars
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            chosen = set(subset)
            if not any(s <= chosen for s in supports):
                return size
    return 0


def is_zero_dimensional(basis: Basis) -> bool:
    """每个变量都有纯幂首项（单位理想也算）"""
    if basis.is_unit:
        return True
    lms = basis.leading_monomials()
    for i in range(basis.ring.nvars):
        if not any(lm[i] and sum(lm) == lm[i] for lm in lms):
            return False
    return True


def staircase(basis: Basis) -> list[Exponent] | None:
    """首项理想之外的全部单项式；无限多时返回 None"""
    if basis.is_unit:
        return []
    if not is_zero_dimensional(basis):
        return None
    lms = basis.leading_monomials()
    n = basis.ring.nvars
    start = basis.ring.zero_exponent()
    seen = {start}
    queue = deque([start])
    while queue:
        exp = queue.popleft()
        for i in range(n):
            nxt = exp[:i] + (exp[i] + 1,) + exp[i + 1 :]
            if nxt in seen or any(divides(lm, nxt) for lm in lms):
                continue
            seen.add(nxt)
            queue.append(nxt)
    return sorted(seen, key=lambda e: (sum(e), e))


def quotient_k_dimension(basis: Basis) -> int | float:
    """dim_k R/L(G)；局部基给出局部商空间维数。无限时返回 INFINITE"""
    stairs = staircase(basis)
    if stairs is None:
        return INFINITE
    return len(stairs)
