"""多项式上的初等运算

偏导、去齐次化、平移、初始次数、jet、加权初始部分、代换。
所有函数都返回新的 Polynomial，不修改输入。
"""

from collections.abc import Mapping, Sequence
from fractions import Fraction
from math import comb
from typing import Literal

from src.core.errors import NotHomogeneousError, RingMismatchError
from src.core.orders import Exponent
from src.core.polynomial import Polynomial, RingContext, Scalar
from src.core.types import Point


def poly_arith(a: Polynomial, b: Polynomial, op: Literal["add", "sub", "mul"]) -> Polynomial:
    """两个同环多项式的加、减、乘"""
    if a.ring != b.ring:
        raise RingMismatchError(f"ring mismatch: ({a.ring}) vs ({b.ring})")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation: {op}")


def partial_derivative(f: Polynomial, i: int) -> Polynomial:
    """对第 i 个变量求形式偏导"""
    if not 0 <= i < f.ring.nvars:
        raise IndexError(f"variable index {i} out of range for ring ({f.ring})")
    terms: dict[Exponent, Fraction] = {}
    for exp, c in f.terms.items():
        e = exp[i]
        if e:
            new = exp[:i] + (e - 1,) + exp[i + 1 :]
            terms[new] = c * e
    return Polynomial(f.ring, terms)


def gradient(f: Polynomial) -> list[Polynomial]:
    """全部一阶偏导（保留零偏导，按变量顺序）"""
    return [partial_derivative(f, i) for i in range(f.ring.nvars)]


def dehomogenize(f: Polynomial, i: int) -> Polynomial:
    """令 x_i = 1，结果位于去掉 x_i 的环中"""
    if not 0 <= i < f.ring.nvars:
        raise IndexError(f"variable index {i} out of range for ring ({f.ring})")
    if not f.is_homogeneous():
        raise NotHomogeneousError(f"{f} is not homogeneous")
    target = f.ring.without([i])
    terms: dict[Exponent, Fraction] = {}
    for exp, c in f.terms.items():
        new = exp[:i] + exp[i + 1 :]
        terms[new] = terms.get(new, Fraction(0)) + c
    return Polynomial(target, terms)


def substitute(
    f: Polynomial,
    mapping: Mapping[int, Polynomial],
    target: RingContext | None = None,
) -> Polynomial:
    """把变量 x_i 代换为 mapping[i]

    未出现在 mapping 中的变量按名字嵌入目标环（目标环必须包含它们）。
    """
    target = target or f.ring
    images: list[Polynomial] = []
    for i, name in enumerate(f.ring.variables):
        if i in mapping:
            image = mapping[i]
            if image.ring != target:
                raise RingMismatchError(f"substitution image {image} not in ring ({target})")
            images.append(image)
        else:
            images.append(Polynomial.variable(target, name))

    power_cache: dict[tuple[int, int], Polynomial] = {}

    def power(i: int, e: int) -> Polynomial:
        if (i, e) not in power_cache:
            power_cache[(i, e)] = images[i] ** e
        return power_cache[(i, e)]

    result = Polynomial.zero(target)
    for exp, c in f.terms.items():
        term = Polynomial.constant(target, c)
        for i, e in enumerate(exp):
            if e:
                term = term * power(i, e)
        result = result + term
    return result


def translate_to_origin(f: Polynomial, p: Point) -> Polynomial:
    """g(x) = f(x + p)，于是 g(0) = f(p)"""
    if p.projective:
        raise ValueError("translate_to_origin expects an affine point")
    if len(p.coordinates) != f.ring.nvars:
        raise ValueError(
            f"point {p} has {len(p.coordinates)} coordinates, ring has {f.ring.nvars} variables"
        )
    if not any(p.coordinates):
        return f

    # 按二项式展开逐项平移，避免通用代换的中间乘法
    terms: dict[Exponent, Fraction] = {}
    for exp, c in f.terms.items():
        partial: dict[Exponent, Fraction] = {(): c}
        for e, a in zip(exp, p.coordinates):
            expanded: dict[Exponent, Fraction] = {}
            for head, coeff in partial.items():
                if not a:
                    expanded[head + (e,)] = coeff
                    continue
                for k in range(e + 1):
                    expanded[head + (k,)] = coeff * comb(e, k) * a ** (e - k)
            partial = expanded
        for exp2, coeff in partial.items():
            terms[exp2] = terms.get(exp2, Fraction(0)) + coeff
    return Polynomial(f.ring, terms)


def initial_degree(f: Polynomial) -> int:
    """支撑集上的最小总次数（阶）"""
    if f.is_zero:
        raise ValueError("initial_degree of the zero polynomial is undefined")
    return min(sum(exp) for exp in f.terms)


def jet(f: Polynomial, d: int) -> Polynomial:
    """总次数 ≤ d 的所有项"""
    return Polynomial(f.ring, {e: c for e, c in f.terms.items() if sum(e) <= d})


def weighted_degree(exp: Exponent, weights: Sequence[int]) -> int:
    return sum(w * e for w, e in zip(weights, exp, strict=True))


def weighted_initial_part(f: Polynomial, weights: Sequence[int]) -> tuple[Polynomial, int]:
    """返回 (F, d)：d 为支撑集上的最小加权次数，F 为加权次数恰为 d 的项之和"""
    if f.is_zero:
        raise ValueError("weighted_initial_part of the zero polynomial is undefined")
    if len(weights) != f.ring.nvars:
        raise ValueError(f"expected {f.ring.nvars} weights, got {len(weights)}")
    if any(w <= 0 for w in weights):
        raise ValueError(f"weights must be strictly positive, got {tuple(weights)}")
    d = min(weighted_degree(e, weights) for e in f.terms)
    initial = {e: c for e, c in f.terms.items() if weighted_degree(e, weights) == d}
    return Polynomial(f.ring, initial), d


def euler_sum(f: Polynomial, weights: Sequence[Scalar]) -> Polynomial:
    """Σ w_i · x_i · ∂f/∂x_i"""
    result: dict[Exponent, Fraction] = {}
    for exp, c in f.terms.items():
        s = sum((Fraction(w) * e for w, e in zip(weights, exp, strict=True)), Fraction(0))
        if s:
            result[exp] = c * s
    return Polynomial(f.ring, result)


def linear_change(f: Polynomial, matrix: Sequence[Sequence[Scalar]]) -> Polynomial:
    """线性坐标变换 x_i ↦ Σ_j matrix[i][j] x_j"""
    n = f.ring.nvars
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise ValueError(f"expected a {n}x{n} matrix")
    variables = [Polynomial.variable(f.ring, j) for j in range(n)]
    mapping = {}
    for i, row in enumerate(matrix):
        image = Polynomial.zero(f.ring)
        for j, a in enumerate(row):
            if a:
                image = image + variables[j] * Fraction(a)
        mapping[i] = image
    return substitute(f, mapping)


def set_variables(f: Polynomial, values: Mapping[int, Scalar]) -> Polynomial:
    """把若干变量赋为常数，结果位于去掉这些变量的环中"""
    target = f.ring.without(values.keys())
    keep = [i for i in range(f.ring.nvars) if i not in values]
    terms: dict[Exponent, Fraction] = {}
    for exp, c in f.terms.items():
        coeff = c
        for i, v in values.items():
            if exp[i]:
                coeff *= Fraction(v) ** exp[i]
        if coeff:
            new = tuple(exp[i] for i in keep)
            terms[new] = terms.get(new, Fraction(0)) + coeff
    return Polynomial(target, terms)
