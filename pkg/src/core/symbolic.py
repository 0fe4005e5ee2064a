"""与 sympy 的桥接

只在需要因式分解、gcd、有理根和精确线性代数的地方把 Polynomial 转成 sympy.Poly。
"""

from collections.abc import Sequence
from fractions import Fraction

import sympy

from src.core.polynomial import Polynomial, RingContext


def symbols_for(ring: RingContext) -> tuple[sympy.Symbol, ...]:
    return tuple(sympy.Symbol(name) for name in ring.variables)


def to_rational(c: Fraction) -> sympy.Rational:
    return sympy.Rational(c.numerator, c.denominator)


def from_rational(c: object) -> Fraction:
    r = sympy.Rational(c)
    return Fraction(int(r.p), int(r.q))


def to_sympy(f: Polynomial) -> sympy.Poly:
    if f.ring.nvars == 0:
        raise ValueError("cannot convert a polynomial in a ring without variables")
    rep = {exp: to_rational(c) for exp, c in f.terms.items()}
    return sympy.Poly.from_dict(rep, *symbols_for(f.ring), domain=sympy.QQ)


def from_sympy(p: sympy.Poly, ring: RingContext) -> Polynomial:
    """sympy.Poly 的生成元必须与 ring 的变量一一对应"""
    names = tuple(str(g) for g in p.gens)
    if names != ring.variables:
        p = p.reorder(*symbols_for(ring))
    terms = {tuple(int(e) for e in exp): from_rational(c) for exp, c in p.as_dict().items()}
    return Polynomial(ring, terms)


def polynomial_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """首一的最大公因式（两者都为零时返回零）"""
    if a.ring != b.ring:
        raise ValueError(f"ring mismatch: ({a.ring}) vs ({b.ring})")
    if a.is_zero:
        return b.monic() if not b.is_zero else b
    if b.is_zero:
        return a.monic()
    g = from_sympy(to_sympy(a).gcd(to_sympy(b)), a.ring)
    return g.monic()


def rational_roots(f: Polynomial, i: int) -> list[Fraction]:
    """只含第 i 个变量的多项式的全部有理根（升序，不计重数）"""
    if f.is_zero:
        raise ValueError("the zero polynomial has every value as a root")
    if any(f.involves(j) for j in range(f.ring.nvars) if j != i):
        raise ValueError(f"{f} is not univariate in {f.ring.variables[i]}")
    if not f.involves(i):
        return []
    x = symbols_for(f.ring)[i]
    univariate = sympy.Poly(to_sympy(f).as_expr(), x, domain=sympy.QQ)
    _, factors = univariate.factor_list()
    roots = set()
    for factor, _ in factors:
        if factor.degree() == 1:
            c1, c0 = factor.all_coeffs()
            roots.add(from_rational(-c0 / c1))
    return sorted(roots)


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows or not rows[0]:
        return 0
    return int(sympy.Matrix([[to_rational(c) for c in row] for row in rows]).rank())


def solve_unique(
    rows: Sequence[Sequence[Fraction]],
    rhs: Sequence[Fraction],
) -> list[Fraction] | None:
    """唯一解；无解或解不唯一时返回 None"""
    a = sympy.Matrix([[to_rational(c) for c in row] for row in rows])
    b = sympy.Matrix([to_rational(c) for c in rhs])
    try:
        solution, params = a.gauss_jordan_solve(b)
    except ValueError:
        return None
    if params.shape[0]:
        return None
    return [from_rational(c) for c in solution]


def determinant(rows: Sequence[Sequence[Polynomial]], ring: RingContext) -> Polynomial:
    """多项式方阵的行列式"""
    gens = symbols_for(ring)
    matrix = sympy.Matrix([[to_sympy(p).as_expr() for p in row] for row in rows])
    det = sympy.expand(matrix.det(method="berkowitz"))
    return from_sympy(sympy.Poly(det, *gens, domain=sympy.QQ), ring)
