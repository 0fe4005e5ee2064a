"""异常层级

所有库异常都继承 GradlinError。CLI 依据 exit_code 把异常映射为进程退出码：
- 1：用法 / 解析错误
- 2：数学前提不满足
- 3：资源上限
- 4：内部一致性失败（判据互相矛盾，说明存在 bug）
"""

from src.core.constants import (
    EXIT_INTERNAL_ERROR,
    EXIT_PRECONDITION,
    EXIT_RESOURCE_LIMIT,
    EXIT_USAGE,
)


class GradlinError(Exception):
    """库异常基类"""

    exit_code: int = EXIT_USAGE
    kind: str = "error"


# ==================== 用法 / 解析 ====================


class RingMismatchError(GradlinError, ValueError):
    """两个多项式不在同一个环中"""

    kind = "ring_mismatch"


class ParseError(GradlinError, ValueError):
    """多项式文本语法错误（带行列号，从 1 开始）"""

    kind = "parse_error"

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class UnknownVariableError(ParseError):
    """引用了环中不存在的变量"""

    kind = "unknown_variable"


# ==================== 数学前提 ====================


class PreconditionError(GradlinError):
    """数学前提不满足"""

    exit_code = EXIT_PRECONDITION
    kind = "precondition"


class OrderKindError(PreconditionError):
    """单项式序类型不符（全局 / 局部）"""

    kind = "order_kind"


class NotHomogeneousError(PreconditionError):
    kind = "not_homogeneous"


class NotOnHypersurfaceError(PreconditionError):
    kind = "not_on_hypersurface"


class PointNotInVarietyError(PreconditionError):
    """点不在理想的零点集中"""

    kind = "point_not_in_variety"


class PositiveDimensionalLocusError(PreconditionError):
    """奇异轨迹维数为正"""

    kind = "positive_dimensional_locus"

    def __init__(self, dimension: int, message: str | None = None):
        self.dimension = dimension
        super().__init__(message or f"singular locus has dimension {dimension}")


class NonIsolatedSingularityError(PreconditionError):
    """局部商空间无限维"""

    kind = "non_isolated_singularity"


class NonReducedError(PreconditionError):
    """输入含重因子"""

    kind = "non_reduced"

    def __init__(self, witness: str):
        self.witness = witness
        super().__init__(f"input has a repeated factor: {witness}")


class NotPlaneCurveError(PreconditionError):
    kind = "not_plane_curve"


class NotSimpleError(PreconditionError):
    kind = "not_simple"


class IncompleteLocusError(PreconditionError):
    """奇点集合含非有理点，无法给出完整结论"""

    kind = "incomplete_locus"


class IrreducibilityNotAssertedError(PreconditionError):
    kind = "irreducibility_not_asserted"


class SaturationError(PreconditionError):
    """饱和迭代在上限内未稳定"""

    kind = "saturation_not_stable"

    def __init__(self, iterations: int):
        self.iterations = iterations
        super().__init__(f"saturation did not stabilize within {iterations} iterations")


# ==================== 资源 ====================


class ResourceLimitError(GradlinError):
    """超出配置的硬性上限（项数、S 对数量）"""

    exit_code = EXIT_RESOURCE_LIMIT
    kind = "resource_limit"

    def __init__(self, limit: str, value: int, cap: int):
        self.limit = limit
        self.value = value
        self.cap = cap
        super().__init__(f"{limit} exceeded: {value} > {cap}")


# ==================== 内部 ====================


class CriteriaDisagreementError(GradlinError):
    """线性型各判据给出不同结论"""

    exit_code = EXIT_INTERNAL_ERROR
    kind = "criteria_disagreement"

    def __init__(self, results: dict[str, bool]):
        self.results = dict(results)
        super().__init__(f"linear-type criteria disagree: {self.results}")


class InternalConsistencyError(GradlinError):
    """两条独立计算路径结果不一致"""

    exit_code = EXIT_INTERNAL_ERROR
    kind = "internal_consistency"
