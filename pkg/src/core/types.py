"""核心数据类型定义

点、超曲面输入、ADE 类型、奇点报告、线性型结论等领域模型。
"""

from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import TYPE_CHECKING

from src.core.constants import ADE_NAMES, CRITERION_REES_DIRECT, E_INDICES, POINT_CRITERIA

if TYPE_CHECKING:
    from src.core.polynomial import Polynomial


class Setting(Enum):
    """几何背景"""

    AFFINE = "affine"
    PROJECTIVE = "projective"


class ADEFamily(Enum):
    """单纯奇点族"""

    A = "A"
    D = "D"
    E = "E"
    NOT_SIMPLE = "NotSimple"
    SMOOTH = "Smooth"


@dataclass(frozen=True, order=True)
class Point:
    """仿射点或射影点

    射影坐标在构造时规范化：最后一个非零坐标为 1。
    """

    coordinates: tuple[Fraction, ...]
    projective: bool = False

    def __post_init__(self) -> None:
        coords = tuple(Fraction(c) for c in self.coordinates)
        if self.projective:
            nonzero = [c for c in coords if c]
            if not nonzero:
                raise ValueError("projective point needs a nonzero coordinate")
            last = nonzero[-1]
            coords = tuple(c / last for c in coords)
        object.__setattr__(self, "coordinates", coords)

    @classmethod
    def affine(cls, *coords: int | Fraction | str) -> "Point":
        return cls(tuple(Fraction(c) for c in coords), projective=False)

    @classmethod
    def homogeneous(cls, *coords: int | Fraction | str) -> "Point":
        return cls(tuple(Fraction(c) for c in coords), projective=True)

    @classmethod
    def origin(cls, n: int) -> "Point":
        return cls((Fraction(0),) * n)

    @property
    def dimension(self) -> int:
        """仿射：坐标数；射影：坐标数 - 1"""
        return len(self.coordinates) - (1 if self.projective else 0)

    @property
    def is_origin(self) -> bool:
        return not self.projective and not any(self.coordinates)

    def __neg__(self) -> "Point":
        if self.projective:
            raise ValueError("negation is defined for affine points only")
        return Point(tuple(-c for c in self.coordinates))

    def chart_index(self) -> int:
        """默认仿射卡：最后一个非零坐标的下标"""
        if not self.projective:
            raise ValueError("chart_index is defined for projective points only")
        return max(i for i, c in enumerate(self.coordinates) if c)

    def in_chart(self, i: int) -> "Point":
        """射影点在第 i 个标准仿射卡（x_i = 1）中的坐标"""
        if not self.projective:
            raise ValueError("in_chart is defined for projective points only")
        pivot = self.coordinates[i]
        if not pivot:
            raise ValueError(f"point {self} does not lie in chart {i}")
        return Point(tuple(c / pivot for j, c in enumerate(self.coordinates) if j != i))

    @classmethod
    def from_chart(cls, affine_point: "Point", i: int) -> "Point":
        coords = list(affine_point.coordinates)
        coords.insert(i, Fraction(1))
        return cls(tuple(coords), projective=True)

    def to_strings(self) -> list[str]:
        """坐标序列化为 "p/q" 字符串"""
        return [str(c) for c in self.coordinates]

    def __str__(self) -> str:
        if self.projective:
            return "[" + ":".join(self.to_strings()) + "]"
        return "(" + ", ".join(self.to_strings()) + ")"


@dataclass(frozen=True)
class ADEType:
    """ADE 类型"""

    family: ADEFamily
    index: int | None = None

    def __post_init__(self) -> None:
        if self.family in (ADEFamily.A, ADEFamily.D, ADEFamily.E):
            if self.index is None:
                raise ValueError(f"{self.family.value} type needs an index")
            if self.family is ADEFamily.A and self.index < 1:
                raise ValueError(f"A_k needs k >= 1, got {self.index}")
            if self.family is ADEFamily.D and self.index < 4:
                raise ValueError(f"D_k needs k >= 4, got {self.index}")
            if self.family is ADEFamily.E and self.index not in E_INDICES:
                raise ValueError(f"E_k needs k in {E_INDICES}, got {self.index}")
        elif self.index is not None:
            raise ValueError(f"{self.family.value} carries no index")

    @property
    def is_simple(self) -> bool:
        return self.family in (ADEFamily.A, ADEFamily.D, ADEFamily.E)

    @property
    def label(self) -> str:
        if self.is_simple:
            return f"{self.family.value}{self.index}"
        return self.family.value

    @property
    def common_name(self) -> str | None:
        if not self.is_simple:
            return None
        return ADE_NAMES.get((self.family.value, self.index))

    @classmethod
    def parse(cls, label: str) -> "ADEType":
        if label in ("NotSimple", "Smooth"):
            return cls(ADEFamily(label))
        return cls(ADEFamily(label[0]), int(label[1:]))

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class HypersurfaceInput:
    """超曲面 X = V(f)"""

    f: "Polynomial"
    setting: Setting = Setting.AFFINE
    assert_irreducible: bool = False
    name: str = "f"

    @property
    def is_projective(self) -> bool:
        return self.setting is Setting.PROJECTIVE


@dataclass(frozen=True)
class SingularPointReport:
    """单个奇点的局部不变量

    构造时检查：τ ≤ μ；局部 Euler ⟺ μ = τ；分类为单纯奇点时 δ = (μ + r - 1)/2。
    """

    point: Point
    milnor: int
    tjurina: int
    multiplicity: int
    locally_eulerian: bool
    residue_degree: int = 1
    chart: str | None = None
    local_complete_intersection: bool | None = None
    socle_cyclic: bool | None = None
    ade: ADEType | None = None
    delta: int | None = None
    branches: int | None = None

    def __post_init__(self) -> None:
        validate_point_invariants(
            milnor=self.milnor,
            tjurina=self.tjurina,
            locally_eulerian=self.locally_eulerian,
            ade=self.ade.label if self.ade else None,
            delta=self.delta,
            branches=self.branches,
        )

    @property
    def euler_defect(self) -> int:
        """μ - τ"""
        return self.milnor - self.tjurina


def validate_point_invariants(
    milnor: int,
    tjurina: int,
    locally_eulerian: bool,
    ade: str | None,
    delta: int | None,
    branches: int | None,
) -> None:
    """奇点报告的数值不变量（报告序列化时也会再次调用）"""
    if tjurina > milnor:
        raise ValueError(f"tjurina ({tjurina}) exceeds milnor ({milnor})")
    if locally_eulerian != (milnor == tjurina):
        raise ValueError(
            f"locally_eulerian={locally_eulerian} contradicts milnor={milnor}, tjurina={tjurina}"
        )
    if ade is not None and ade not in ("NotSimple", "Smooth"):
        index = int(ade[1:])
        if index != milnor:
            raise ValueError(f"ADE index of {ade} differs from milnor number {milnor}")
        if delta is None or branches is None:
            raise ValueError(f"classified point {ade} needs delta and branches")
        if 2 * delta != milnor + branches - 1:
            raise ValueError(f"delta={delta} violates (mu + r - 1)/2 with r={branches}")


@dataclass
class LinearTypeVerdict:
    """线性型判定结果

    verdict 为 None 表示没有任何有效判据可以下结论（例如奇异轨迹一维且未做直接比较）。
    """

    verdict: bool | None
    methods: list[str] = field(default_factory=list)
    witness: "Polynomial | None" = None
    failing_points: list[Point] = field(default_factory=list)
    evidence: list[SingularPointReport] = field(default_factory=list)
    caveats: list[str] = field(default_factory=list)
    informational: dict[str, bool] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.verdict is not False:
            return
        if CRITERION_REES_DIRECT in self.methods and self.witness is None:
            raise ValueError("negative rees-direct verdict needs a witness")
        point_only = self.methods and set(self.methods) <= set(POINT_CRITERIA)
        if point_only and not self.failing_points:
            raise ValueError("negative point-local verdict needs a failing point")


def sort_points(points: Iterable[Point]) -> list[Point]:
    """按字典序排序（射影点在仿射点之后）"""
    return sorted(points, key=lambda p: (p.projective, p.coordinates))
