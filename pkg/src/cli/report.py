"""JSON 报告模型

所有有理数序列化为 "p/q" 字符串，多项式序列化为可重新解析的文本。
奇点报告在构造模型时重新检查数值不变量（τ ≤ μ、Euler ⟺ μ = τ、δ 公式）。
"""

from typing import Any

from pydantic import BaseModel, Field, field_validator, model_validator

from src.blowup.presentation import PresentationIdeal
from src.core.constants import SCHEMA_VERSION
from src.core.errors import GradlinError
from src.core.types import LinearTypeVerdict, SingularPointReport, validate_point_invariants
from src.groebner.syzygy import SyzygyMatrix
from src.singularity.points import SingularLocus


class PointModel(BaseModel):
    """单个奇点"""

    point: list[str]
    projective: bool
    chart: str | None = None
    multiplicity: int = Field(ge=2)
    milnor: int = Field(ge=1)
    tjurina: int = Field(ge=1)
    euler_defect: int = Field(ge=0)
    locally_eulerian: bool
    local_complete_intersection: bool | None = None
    socle_cyclic: bool | None = None
    ade: str | None = None
    ade_name: str | None = None
    delta: int | None = None
    branches: int | None = None
    residue_degree: int = 1

    @field_validator("point")
    @classmethod
    def validate_rationals(cls, v: list[str]) -> list[str]:
        for c in v:
            numerator, _, denominator = c.partition("/")
            int(numerator)
            if denominator and int(denominator) <= 0:
                raise ValueError(f"bad rational coordinate {c!r}")
        return v

    @model_validator(mode="after")
    def validate_invariants(self) -> "PointModel":
        validate_point_invariants(
            milnor=self.milnor,
            tjurina=self.tjurina,
            locally_eulerian=self.locally_eulerian,
            ade=self.ade,
            delta=self.delta,
            branches=self.branches,
        )
        if self.euler_defect != self.milnor - self.tjurina:
            raise ValueError("euler_defect must equal milnor - tjurina")
        return self

    @classmethod
    def from_report(cls, report: SingularPointReport) -> "PointModel":
        return cls(
            point=report.point.to_strings(),
            projective=report.point.projective,
            chart=report.chart,
            multiplicity=report.multiplicity,
            milnor=report.milnor,
            tjurina=report.tjurina,
            euler_defect=report.euler_defect,
            locally_eulerian=report.locally_eulerian,
            local_complete_intersection=report.local_complete_intersection,
            socle_cyclic=report.socle_cyclic,
            ade=report.ade.label if report.ade else None,
            ade_name=report.ade.common_name if report.ade else None,
            delta=report.delta,
            branches=report.branches,
            residue_degree=report.residue_degree,
        )


class LocusModel(BaseModel):
    """奇异轨迹概要"""

    dimension: int = Field(ge=-1)
    complete: bool
    leftover: list[str] | None = None
    leftover_chart: str | None = None

    @classmethod
    def from_locus(cls, locus: SingularLocus) -> "LocusModel":
        return cls(
            dimension=locus.dimension,
            complete=locus.complete,
            leftover=[str(g) for g in locus.leftover.generators] if locus.leftover else None,
            leftover_chart=locus.leftover_chart,
        )


class SyzygyModel(BaseModel):
    """合冲矩阵（每列一个合冲）"""

    generators: list[str]
    columns: list[list[str]]
    verified: bool

    @classmethod
    def from_matrix(cls, matrix: SyzygyMatrix) -> "SyzygyModel":
        return cls(
            generators=[str(g) for g in matrix.generators],
            columns=[[str(e) for e in column] for column in matrix.columns],
            verified=matrix.verify(),
        )


class PresentationModel(BaseModel):
    """对称代数或 Rees 代数的表示理想"""

    kind: str
    variables: list[str]
    t_variables: list[str]
    generators: list[str]
    t_degrees: list[int]

    @classmethod
    def from_presentation(cls, presentation: PresentationIdeal) -> "PresentationModel":
        return cls(
            kind=presentation.kind.value,
            variables=list(presentation.ring.variables),
            t_variables=list(presentation.t_variables),
            generators=[str(g) for g in presentation.generators],
            t_degrees=[presentation.t_degree(g) for g in presentation.generators],
        )


class VerdictModel(BaseModel):
    """线性型结论"""

    verdict: bool | None
    methods: list[str]
    witness: str | None = None
    failing_points: list[list[str]] = Field(default_factory=list)
    evidence: list[PointModel] = Field(default_factory=list)
    caveats: list[str] = Field(default_factory=list)
    informational: dict[str, bool] = Field(default_factory=dict)

    @classmethod
    def from_verdict(cls, verdict: LinearTypeVerdict) -> "VerdictModel":
        return cls(
            verdict=verdict.verdict,
            methods=list(verdict.methods),
            witness=str(verdict.witness) if verdict.witness is not None else None,
            failing_points=[p.to_strings() for p in verdict.failing_points],
            evidence=[PointModel.from_report(r) for r in verdict.evidence],
            caveats=list(verdict.caveats),
            informational=dict(verdict.informational),
        )


class ErrorModel(BaseModel):
    """结构化错误"""

    kind: str
    message: str
    exit_code: int

    @classmethod
    def from_exception(cls, error: GradlinError) -> "ErrorModel":
        return cls(kind=type(error).__name__, message=str(error), exit_code=error.exit_code)


class Report(BaseModel):
    """单个命名多项式的报告"""

    name: str
    input: str
    setting: str
    variables: list[str]
    commands: list[str]
    locus: LocusModel | None = None
    singular_points: list[PointModel] | None = None
    syzygies: SyzygyModel | None = None
    symmetric: PresentationModel | None = None
    rees: PresentationModel | None = None
    linear_type: VerdictModel | None = None
    genus: int | None = Field(default=None, ge=0)
    timings: dict[str, float] = Field(default_factory=dict)
    warnings: list[str] = Field(default_factory=list)
    error: ErrorModel | None = None

    @property
    def exit_code(self) -> int:
        return self.error.exit_code if self.error else 0

    def stable_dump(self) -> dict[str, Any]:
        """去掉计时信息后的内容（用于确定性比较）"""
        return self.model_dump(exclude={"timings"})


class ReportBatch(BaseModel):
    """一次调用的全部报告（每个命名多项式一个）"""

    schema_version: str = SCHEMA_VERSION
    source: str
    reports: list[Report] = Field(default_factory=list)
    error: ErrorModel | None = None

    @property
    def exit_code(self) -> int:
        codes = [r.exit_code for r in self.reports]
        if self.error:
            codes.append(self.error.exit_code)
        return max(codes, default=0)

    def report(self, name: str) -> Report:
        for r in self.reports:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_json(self, indent: int = 2) -> str:
        return self.model_dump_json(indent=indent)

    def stable_dump(self) -> dict[str, Any]:
        data = self.model_dump(exclude={"reports"})
        data["reports"] = [r.stable_dump() for r in self.reports]
        return data
