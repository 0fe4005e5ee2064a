"""约化内核

基计算内部直接操作 {指数: 系数} 字典，只在边界处包装为 Polynomial。
"""

from fractions import Fraction

from src.core.config import get_engine_config
from src.core.errors import ResourceLimitError
from src.core.orders import Exponent, MonomialOrder

Terms = dict[Exponent, Fraction]


class Element:
    """基元素：项表及缓存的首项、écart、sugar"""

    __slots__ = ("terms", "lm", "lc", "ecart", "sugar", "component")

    def __init__(self, terms: Terms, order: MonomialOrder, sugar: int | None = None):
        self.terms = terms
        self.lm = order.leading(terms)
        self.lc = terms[self.lm]
        if order.is_local:
            self.ecart = max(order.degree(e) for e in terms) - order.degree(self.lm)
        else:
            self.ecart = 0
        self.sugar = sugar if sugar is not None else max(sum(e) for e in terms)
        self.component = order.component(self.lm)


def divides(a: Exponent, b: Exponent) -> bool:
    """单项式 x^a 是否整除 x^b"""
    return all(x <= y for x, y in zip(a, b))


def lcm_exponent(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def coprime(a: Exponent, b: Exponent) -> bool:
    return not any(x and y for x, y in zip(a, b))


def check_terms(terms: Terms) -> None:
    cap = get_engine_config().max_terms
    if len(terms) > cap:
        raise ResourceLimitError("max_terms", len(terms), cap)


def subtract_multiple(p: Terms, g: Terms, shift: Exponent, factor: Fraction) -> None:
    """原地执行 p -= factor * x^shift * g"""
    for e, c in g.items():
        exp = tuple(a + b for a, b in zip(e, shift))
        s = p.get(exp, 0) - factor * c
        if s:
            p[exp] = s
        else:
            p.pop(exp, None)


def monic(terms: Terms, lc: Fraction) -> Terms:
    if lc == 1:
        return terms
    return {e: c / lc for e, c in terms.items()}


def s_polynomial(f: Element, g: Element) -> Terms:
    lcm = lcm_exponent(f.lm, g.lm)
    sf = tuple(a - b for a, b in zip(lcm, f.lm))
    sg = tuple(a - b for a, b in zip(lcm, g.lm))
    result: Terms = {}
    subtract_multiple(result, f.terms, sf, -1 / f.lc)
    subtract_multiple(result, g.terms, sg, 1 / g.lc)
    return result


def s_sugar(f: Element, g: Element) -> int:
    lcm = lcm_exponent(f.lm, g.lm)
    return max(
        f.sugar + sum(lcm) - sum(f.lm),
        g.sugar + sum(lcm) - sum(g.lm),
    )


def find_reducer(lm: Exponent, elements: list[Element]) -> Element | None:
    for g in elements:
        if divides(g.lm, lm):
            return g
    return None


def reduce_full(p: Terms, elements: list[Element], order: MonomialOrder) -> Terms:
    """全局序下的完全约化（首项与尾项都约化）"""
    p = dict(p)
    remainder: Terms = {}
    while p:
        check_terms(p)
        lm = order.leading(p)
        g = find_reducer(lm, elements)
        if g is None:
            remainder[lm] = p.pop(lm)
            continue
        shift = tuple(a - b for a, b in zip(lm, g.lm))
        subtract_multiple(p, g.terms, shift, p[lm] / g.lc)
    return remainder


def mora_reduce(p: Terms, elements: list[Element], order: MonomialOrder) -> Terms:
    """Mora 弱正规形式

    每一步在首项可整除的约化元中选 écart 最小者；若其 écart 大于当前多项式的 écart，
    先把当前多项式加入约化集合。返回值为零，或首项不在首项理想中。
    """
    h = dict(p)
    reducers = list(elements)
    while h:
        check_terms(h)
        lm = order.leading(h)
        best: Element | None = None
        for g in reducers:
            if divides(g.lm, lm) and (best is None or g.ecart < best.ecart):
                best = g
        if best is None:
            return h
        h_ecart = max(order.degree(e) for e in h) - order.degree(lm)
        if best.ecart > h_ecart:
            reducers.append(Element(dict(h), order))
        shift = tuple(a - b for a, b in zip(lm, best.lm))
        subtract_multiple(h, best.terms, shift, h[lm] / best.lc)
    return h
