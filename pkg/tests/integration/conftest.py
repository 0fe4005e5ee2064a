"""集成测试专用 fixtures

为集成测试提供：
1. 逐字段比较的报告期望值（tests/golden/worked_examples.yaml）
2. 随机半拟齐次平面曲线芽生成器
3. 报告字段子集比较
"""

import random
from collections.abc import Callable
from fractions import Fraction
from pathlib import Path
from typing import Any

import pytest
import yaml

from src.core.polynomial import Polynomial, RingContext

ROOT = Path(__file__).resolve().parents[2]
GOLDEN_FILE = ROOT / "tests" / "golden" / "worked_examples.yaml"
CORPUS_DIR = ROOT / "corpus"


def load_golden() -> list[dict[str, Any]]:
    with open(GOLDEN_FILE, encoding="utf-8") as f:
        return yaml.safe_load(f)


def golden_params() -> list[Any]:
    """把 golden 条目转成 pytest 参数；slow 条目加 slow 标记"""
    params = []
    for entry in load_golden():
        marks = [pytest.mark.slow] if entry.get("slow") else []
        params.append(pytest.param(entry, id=entry["id"], marks=marks))
    return params


def assert_subset(expected: Any, actual: Any, path: str = "") -> None:
    """expected 中出现的字段必须与 actual 一致；列表逐项比较且长度相同"""
    if isinstance(expected, dict):
        assert isinstance(actual, dict), f"{path}: expected object, got {actual!r}"
        for key, value in expected.items():
            assert key in actual, f"{path}.{key}: missing"
            assert_subset(value, actual[key], f"{path}.{key}")
    elif isinstance(expected, list):
        assert isinstance(actual, list), f"{path}: expected list, got {actual!r}"
        assert len(expected) == len(actual), f"{path}: {len(actual)} items, want {len(expected)}"
        for i, (e, a) in enumerate(zip(expected, actual, strict=True)):
            assert_subset(e, a, f"{path}[{i}]")
    else:
        assert expected == actual, f"{path}: {actual!r} != {expected!r}"


# ==================== 随机曲线芽 ====================


def semiquasi_germ(rng: random.Random, ring: RingContext) -> tuple[Polynomial, int]:
    """
    y^a + x^b 加上 Newton 对角线以上的随机项

    这样的芽在原点是孤立奇点，Milnor 数为 (a−1)(b−1)。
    返回 (芽, 期望的 Milnor 数)。
    """
    a = rng.randint(2, 4)
    b = rng.randint(a, 5)
    terms: dict[tuple[int, ...], Fraction] = {(0, a): Fraction(1), (b, 0): Fraction(1)}
    for i in range(b + 1):
        for j in range(a + 1):
            above = i * a + j * b > a * b
            if above and (i, j) not in terms and rng.random() < 0.3:
                terms[(i, j)] = Fraction(rng.randint(-3, 3) or 1, rng.randint(1, 2))
    return Polynomial(ring, terms), (a - 1) * (b - 1)


def random_form(rng: random.Random, ring: RingContext, degree: int) -> Polynomial:
    """给定次数的随机齐次多项式（系数为小整数）"""
    n = ring.nvars
    f = Polynomial.zero(ring)

    def exponents(k: int, total: int) -> list[tuple[int, ...]]:
        if k == 1:
            return [(total,)]
        return [(e, *rest) for e in range(total + 1) for rest in exponents(k - 1, total - e)]

    for exp in exponents(n, degree):
        if rng.random() < 0.5:
            f = f + Polynomial.monomial(ring, exp, rng.randint(-5, 5))
    return f


@pytest.fixture
def germ_factory() -> Callable[[int], tuple[Polynomial, int]]:
    ring = RingContext.of("x", "y")

    def make(seed: int) -> tuple[Polynomial, int]:
        return semiquasi_germ(random.Random(seed), ring)

    return make


@pytest.fixture
def form_factory() -> Callable[[int, RingContext, int], Polynomial]:
    def make(seed: int, ring: RingContext, degree: int) -> Polynomial:
        return random_form(random.Random(seed), ring, degree)

    return make
