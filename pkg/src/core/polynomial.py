"""稀疏多元多项式

系数为有理数（fractions.Fraction，始终为既约分数、分母为正），
项表为 {指数元组: 非零系数}。所有 Polynomial 实例构造后不可变，可在线程间共享。
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Union

from src.core.config import get_engine_config
from src.core.errors import RingMismatchError, ResourceLimitError
from src.core.orders import DEGREVLEX, Exponent, MonomialOrder

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class RingContext:
    """多项式环 Q[x_1, ..., x_n]（有序变量名）"""

    variables: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names: {self.variables}")
        for name in self.variables:
            if not name or not (name[0].isalpha() or name[0] == "_"):
                raise ValueError(f"invalid variable name: {name!r}")

    @classmethod
    def of(cls, *names: str) -> "RingContext":
        """RingContext.of("x", "y", "z") 或 RingContext.of("x,y,z")"""
        if len(names) == 1 and "," in names[0]:
            names = tuple(n.strip() for n in names[0].split(","))
        return cls(tuple(names))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"variable {name!r} not in ring {self.variables}") from None

    def extend(self, names: Iterable[str]) -> "RingContext":
        """在末尾追加新变量"""
        names = tuple(names)
        clash = set(names) & set(self.variables)
        if clash:
            raise ValueError(f"variables already present: {sorted(clash)}")
        return RingContext(self.variables + names)

    def without(self, indices: Iterable[int]) -> "RingContext":
        drop = set(indices)
        return RingContext(tuple(v for i, v in enumerate(self.variables) if i not in drop))

    def zero_exponent(self) -> Exponent:
        return (0,) * self.nvars

    def __str__(self) -> str:
        return ",".join(self.variables)


def _check_size(n_terms: int) -> None:
    cap = get_engine_config().max_terms
    if n_terms > cap:
        raise ResourceLimitError("max_terms", n_terms, cap)


class Polynomial:
    """有理系数稀疏多项式"""

    __slots__ = ("_ring", "_terms", "_hash")

    def __init__(self, ring: RingContext, terms: Mapping[Exponent, Scalar] | None = None):
        clean: dict[Exponent, Fraction] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != ring.nvars:
                raise ValueError(
                    f"exponent {exp} has length {len(exp)}, ring has {ring.nvars} variables"
                )
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = Fraction(coeff)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        _check_size(len(clean))
        self._ring = ring
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _trusted(cls, ring: RingContext, terms: dict[Exponent, Fraction]) -> "Polynomial":
        """内部构造：terms 已经满足不变量（系数为非零 Fraction），直接接管"""
        _check_size(len(terms))
        obj = cls.__new__(cls)
        obj._ring = ring
        obj._terms = terms
        obj._hash = None
        return obj

    # ==================== 构造 ====================

    @classmethod
    def zero(cls, ring: RingContext) -> "Polynomial":
        return cls._trusted(ring, {})

    @classmethod
    def constant(cls, ring: RingContext, value: Scalar) -> "Polynomial":
        value = Fraction(value)
        return cls._trusted(ring, {ring.zero_exponent(): value} if value else {})

    @classmethod
    def variable(cls, ring: RingContext, var: str | int) -> "Polynomial":
        i = ring.index(var) if isinstance(var, str) else var
        if not 0 <= i < ring.nvars:
            raise IndexError(f"variable index {i} out of range")
        exp = tuple(1 if j == i else 0 for j in range(ring.nvars))
        return cls._trusted(ring, {exp: Fraction(1)})

    @classmethod
    def monomial(cls, ring: RingContext, exp: Exponent, coeff: Scalar = 1) -> "Polynomial":
        return cls(ring, {tuple(exp): coeff})

    # ==================== 访问 ====================

    @property
    def ring(self) -> RingContext:
        return self._ring

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(not any(exp) for exp in self._terms)

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get(self._ring.zero_exponent(), Fraction(0))

    def total_degree(self) -> int:
        """总次数；零多项式返回 -1"""
        return max((sum(exp) for exp in self._terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((exp[i] for exp in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(exp) for exp in self._terms}) <= 1

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._trusted(
            self._ring, {e: c for e, c in self._terms.items() if sum(e) == d}
        )

    def leading_term(self, order: MonomialOrder = DEGREVLEX) -> tuple[Exponent, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exp = order.leading(self._terms)
        return exp, self._terms[exp]

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX) -> Exponent:
        return self.leading_term(order)[0]

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        if not self._terms:
            return self
        _, lc = self.leading_term(order)
        if lc == 1:
            return self
        return Polynomial._trusted(self._ring, {e: c / lc for e, c in self._terms.items()})

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX) -> list[tuple[Exponent, Fraction]]:
        return [(e, self._terms[e]) for e in order.sorted_desc(self._terms)]

    def evaluate(self, values: Iterable[Scalar]) -> Fraction:
        vals = [Fraction(v) for v in values]
        if len(vals) != self._ring.nvars:
            raise ValueError(f"expected {self._ring.nvars} values, got {len(vals)}")
        total = Fraction(0)
        for exp, c in self._terms.items():
            term = c
            for v, e in zip(vals, exp):
                if e:
                    term *= v**e
            total += term
        return total

    # ==================== 算术 ====================

    def _coerce(self, other: object) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other._ring != self._ring:
                raise RingMismatchError(
                    f"ring mismatch: ({self._ring}) vs ({other._ring})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self._ring, other)
        return NotImplemented

    def __add__(self, other: object) -> "Polynomial":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        result = dict(self._terms)
        for exp, c in o._terms.items():
            s = result.get(exp, 0) + c
            if s:
                result[exp] = s
            else:
                result.pop(exp, None)
        return Polynomial._trusted(self._ring, result)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._trusted(self._ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: object) -> "Polynomial":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "Polynomial":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Polynomial.zero(self._ring)
            return Polynomial._trusted(self._ring, {e: v * c for e, v in self._terms.items()})
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        result: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                s = result.get(exp, 0) + c1 * c2
                if s:
                    result[exp] = s
                else:
                    result.pop(exp, None)
        return Polynomial._trusted(self._ring, result)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(self._ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_term(self, exp: Exponent, coeff: Scalar = 1) -> "Polynomial":
        """乘以单项 coeff * x^exp"""
        c = Fraction(coeff)
        if not c:
            return Polynomial.zero(self._ring)
        return Polynomial._trusted(
            self._ring,
            {tuple(a + b for a, b in zip(e, exp)): v * c for e, v in self._terms.items()},
        )

    def exact_divide(self, divisor: "Polynomial") -> "Polynomial":
        """整除；不能整除时抛出 ValueError"""
        divisor = self._coerce(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        d_exp, d_c = divisor.leading_term(DEGREVLEX)
        remainder = dict(self._terms)
        quotient: dict[Exponent, Fraction] = {}
        while remainder:
            r_exp = DEGREVLEX.leading(remainder)
            shift = tuple(a - b for a, b in zip(r_exp, d_exp))
            if any(s < 0 for s in shift):
                raise ValueError(f"{divisor} does not divide {self}")
            q = remainder[r_exp] / d_c
            quotient[shift] = q
            for e, c in divisor._terms.items():
                exp = tuple(a + b for a, b in zip(e, shift))
                s = remainder.get(exp, 0) - q * c
                if s:
                    remainder[exp] = s
                else:
                    remainder.pop(exp, None)
        return Polynomial._trusted(self._ring, quotient)

    # ==================== 换环 ====================

    def embed(self, target: RingContext) -> "Polynomial":
        """按变量名嵌入更大的环"""
        if target == self._ring:
            return self
        positions = [target.index(v) for v in self._ring.variables]
        result: dict[Exponent, Fraction] = {}
        for exp, c in self._terms.items():
            new = [0] * target.nvars
            for pos, e in zip(positions, exp):
                new[pos] = e
            result[tuple(new)] = c
        return Polynomial._trusted(target, result)

    def restrict(self, target: RingContext) -> "Polynomial":
        """投影到较小的环；被去掉的变量不能出现"""
        if target == self._ring:
            return self
        keep = [self._ring.index(v) for v in target.variables]
        dropped = [i for i in range(self._ring.nvars) if i not in keep]
        result: dict[Exponent, Fraction] = {}
        for exp, c in self._terms.items():
            if any(exp[i] for i in dropped):
                raise RingMismatchError(f"{self} involves variables outside ({target})")
            result[tuple(exp[i] for i in keep)] = c
        return Polynomial._trusted(target, result)

    def involves(self, i: int) -> bool:
        return any(exp[i] for exp in self._terms)

    # ==================== 比较 / 打印 ====================

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._ring == other._ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant and self.constant_term == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._ring, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r}, ring=({self._ring}))"


def format_monomial(exp: Exponent, variables: tuple[str, ...]) -> str:
    parts = []
    for name, e in zip(variables, exp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(f: Polynomial, order: MonomialOrder = DEGREVLEX) -> str:
    """打印为语法分析器可读回的文本，项按 order 降序"""
    if f.is_zero:
        return "0"
    chunks: list[str] = []
    for i, (exp, c) in enumerate(f.sorted_terms(order)):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = format_monomial(exp, f.ring.variables)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if i == 0:
            chunks.append(f"-{body}" if sign == "-" else body)
        else:
            chunks.append(f" {sign} {body}")
    return "".join(chunks)
