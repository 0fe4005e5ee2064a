"""单项式序

每个序提供 key(exp)：返回可比较的元组，key 越大单项式越大。
- 全局序（degrevlex、lex、正权重、块序、模扩张）：1 是最小单项式
- 局部序（negdegrevlex、负权重）：1 是最大单项式，用于 Mora 标准基
"""

from abc import ABC, abstractmethod
from collections.abc import Iterable, Mapping
from typing import Any

Exponent = tuple[int, ...]


class MonomialOrder(ABC):
    """单项式序基类"""

    name: str = "order"
    is_local: bool = False

    @abstractmethod
    def key(self, exp: Exponent) -> tuple[Any, ...]:
        """排序键，越大越靠前"""

    @property
    @abstractmethod
    def signature(self) -> tuple[Any, ...]:
        """规范描述，用于相等比较和缓存键"""

    @property
    def is_global(self) -> bool:
        return not self.is_local

    def degree(self, exp: Exponent) -> int:
        """écart 使用的次数函数（默认总次数）"""
        return sum(exp)

    def component(self, exp: Exponent) -> int | None:
        """模元素的分量下标；普通多项式返回 None"""
        return None

    def leading(self, terms: Mapping[Exponent, Any]) -> Exponent:
        """首单项式"""
        return max(terms, key=self.key)

    def sorted_desc(self, exps: Iterable[Exponent]) -> list[Exponent]:
        return sorted(exps, key=self.key, reverse=True)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MonomialOrder) and self.signature == other.signature

    def __hash__(self) -> int:
        return hash(self.signature)

    def __repr__(self) -> str:
        return f"{type(self).__name__}{self.signature[1:]}"


class DegRevLex(MonomialOrder):
    """分次反字典序"""

    name = "degrevlex"

    def key(self, exp: Exponent) -> tuple[Any, ...]:
        return (sum(exp), tuple(-e for e in reversed(exp)))

    @property
    def signature(self) -> tuple[Any, ...]:
        return ("degrevlex",)


class Lex(MonomialOrder):
    """字典序（第一个变量最大）"""

    name = "lex"

    def key(self, exp: Exponent) -> tuple[Any, ...]:
        return exp

    @property
    def signature(self) -> tuple[Any, ...]:
        return ("lex",)


class NegDegRevLex(MonomialOrder):
    """局部分次反字典序（Singular 中的 ds）

    次数低的单项式更大，同次数按 degrevlex 比较。
    """

    name = "negdegrevlex"
    is_local = True

    def key(self, exp: Exponent) -> tuple[Any, ...]:
        return (-sum(exp), tuple(-e for e in reversed(exp)))

    @property
    def signature(self) -> tuple[Any, ...]:
        return ("negdegrevlex",)


class WeightedOrder(MonomialOrder):
    """权重序

    local=False：权重次数高者大（全局）；local=True：权重次数低者大（局部）。
    同权重次数时按反字典序打破平局。
    """

    name = "weighted"

    def __init__(self, weights: Iterable[int], local: bool = False):
        self.weights = tuple(int(w) for w in weights)
        if any(w <= 0 for w in self.weights):
            raise ValueError(f"weights must be positive, got {self.weights}")
        self.is_local = local

    def degree(self, exp: Exponent) -> int:
        return sum(w * e for w, e in zip(self.weights, exp, strict=True))

    def key(self, exp: Exponent) -> tuple[Any, ...]:
        wdeg = self.degree(exp)
        return (-wdeg if self.is_local else wdeg, tuple(-e for e in reversed(exp)))

    @property
    def signature(self) -> tuple[Any, ...]:
        return ("weighted", self.weights, self.is_local)


class BlockOrder(MonomialOrder):
    """消元块序

    elim 中的变量组成第一块：任何含消元变量的单项式都大于不含它们的单项式。
    两块都必须是全局序。
    """

    name = "block"

    def __init__(
        self,
        elim: Iterable[int],
        nvars: int,
        inner: MonomialOrder | None = None,
        outer: MonomialOrder | None = None,
    ):
        self.elim = tuple(sorted(set(elim)))
        if any(i < 0 or i >= nvars for i in self.elim):
            raise ValueError(f"elimination indices {self.elim} out of range for {nvars} variables")
        self.nvars = nvars
        self.rest = tuple(i for i in range(nvars) if i not in self.elim)
        self.inner = inner or DegRevLex()
        self.outer = outer or DegRevLex()
        if self.inner.is_local or self.outer.is_local:
            raise ValueError("block orders are built from global orders only")

    def key(self, exp: Exponent) -> tuple[Any, ...]:
        return (
            self.inner.key(tuple(exp[i] for i in self.elim)),
            self.outer.key(tuple(exp[i] for i in self.rest)),
        )

    @property
    def signature(self) -> tuple[Any, ...]:
        return ("block", self.elim, self.nvars, self.inner.signature, self.outer.signature)


class ModuleOrder(MonomialOrder):
    """自由模 R^k 上的序

    模元素用带分量标记变量的多项式表示：前 n_base 个指数属于基环，
    后 n_components 个指数恰有一个为 1，标记所在分量。
    position="pot"：先比较分量（下标小的分量大），再比较基单项式；
    position="top"：先比较基单项式，再比较分量。
    """

    name = "module"

    def __init__(
        self,
        base: MonomialOrder,
        n_base: int,
        n_components: int,
        position: str = "pot",
    ):
        if position not in ("pot", "top"):
            raise ValueError(f"unknown position rule: {position}")
        self.base = base
        self.n_base = n_base
        self.n_components = n_components
        self.position = position
        self.is_local = base.is_local

    def component(self, exp: Exponent) -> int | None:
        for c in range(self.n_components):
            if exp[self.n_base + c]:
                return c
        return None

    def degree(self, exp: Exponent) -> int:
        return self.base.degree(exp[: self.n_base])

    def key(self, exp: Exponent) -> tuple[Any, ...]:
        c = self.component(exp)
        rank = -c if c is not None else 1
        base_key = self.base.key(exp[: self.n_base])
        if self.position == "pot":
            return (rank, base_key)
        return (base_key, rank)

    @property
    def signature(self) -> tuple[Any, ...]:
        return ("module", self.base.signature, self.n_base, self.n_components, self.position)


# 常用实例
DEGREVLEX = DegRevLex()
LEX = Lex()
NEGDEGREVLEX = NegDegRevLex()
