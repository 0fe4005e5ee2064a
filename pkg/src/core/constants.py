"""核心常量定义

本模块定义项目中使用的核心常量，包括退出码、默认上限、报告版本、ADE 表等。
"""

# ============================================================================
# 报告格式
# ============================================================================

# JSON 报告 schema 版本（报告结构任何变化都需要升级）
SCHEMA_VERSION = "1.0.0"

# ============================================================================
# 进程退出码
# ============================================================================

EXIT_OK = 0
EXIT_USAGE = 1  # 用法 / 解析错误
EXIT_PRECONDITION = 2  # 数学前提不满足
EXIT_RESOURCE_LIMIT = 3  # 资源上限
EXIT_INTERNAL_ERROR = 4  # 判据冲突等内部错误

# ============================================================================
# 默认资源上限
# ============================================================================

# 单个多项式的最大项数
DEFAULT_MAX_TERMS = 1_000_000

# 单次基计算允许处理的 S 对数量
DEFAULT_MAX_PAIRS = 200_000

# 饱和迭代上限
DEFAULT_SATURATION_CAP = 50

# ============================================================================
# 内部辅助变量名
# ============================================================================

# 辅助变量以下划线开头；输入文件的 ring 语句保留下划线前缀，fresh_variable 再处理剩余冲突
COLON_VARIABLE = "_s"  # (1-s) 技巧 / Rabinowitsch 变量
REES_VARIABLE = "_t"  # Rees 代数的参数 t
COMPONENT_PREFIX = "_e"  # 模元素的分量标记
T_VARIABLE_PREFIX = "T"  # 对称代数 / Rees 代数的新变量 T1..Tm

# ============================================================================
# 线性型判据标签
# ============================================================================

CRITERION_LOCAL_CI = "local-CI"
CRITERION_LOCALLY_EULERIAN = "locally-eulerian"
CRITERION_SYZYGY_CODIM = "syzygy-codim"
CRITERION_SOCLE_CYCLIC = "socle-cyclic"
CRITERION_REES_DIRECT = "rees-direct"

# ============================================================================
# 单纯奇点（ADE）
# ============================================================================

# E 型只有 6、7、8 三种
E_INDICES = (6, 7, 8)

# E 型分支数
E_BRANCHES = {6: 1, 7: 2, 8: 1}

# 常见名称
ADE_NAMES = {
    ("A", 1): "node",
    ("A", 2): "simple cusp",
    ("A", 3): "tacnode",
    ("A", 4): "rhamphoid cusp",
    ("A", 5): "oscnode",
    ("A", 6): "A6 cusp",
    ("D", 4): "ordinary triple point",
    ("D", 5): "D5 point",
    ("E", 6): "E6 point",
    ("E", 7): "E7 point",
    ("E", 8): "E8 point",
}

# 平面曲线输入最小次数（射影情形）
MIN_PROJECTIVE_DEGREE = 3

# 逐点判据（失败时需要记录失败点）
POINT_CRITERIA = (
    CRITERION_LOCAL_CI,
    CRITERION_LOCALLY_EULERIAN,
    CRITERION_SOCLE_CYCLIC,
)
