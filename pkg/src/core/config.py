"""配置加载器

从 YAML 文件和环境变量加载配置。

引擎上限（项数、S 对数量、饱和迭代次数）通过"当前引擎配置"提供给各个算法内核，
库函数本身不需要额外参数。
"""

import threading
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Literal, cast

import structlog
import yaml
from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from src.core.constants import (
    DEFAULT_MAX_PAIRS,
    DEFAULT_MAX_TERMS,
    DEFAULT_SATURATION_CAP,
)

logger = structlog.get_logger()


class EngineConfig(BaseModel):
    """代数引擎配置

    所有上限都是硬性上限：超出时抛出 ResourceLimitError，不做截断。
    """

    max_terms: int = Field(
        default=DEFAULT_MAX_TERMS,
        description="单个多项式最大项数",
        gt=0,
    )
    max_pairs: int = Field(
        default=DEFAULT_MAX_PAIRS,
        description="单次基计算处理的 S 对上限",
        gt=0,
    )
    saturation_cap: int = Field(
        default=DEFAULT_SATURATION_CAP,
        description="饱和迭代次数上限",
        ge=1,
        le=10_000,
    )
    saturation_method: Literal["iterate", "rabinowitsch"] = Field(
        default="iterate",
        description="饱和算法：反复做商理想，或引入 Rabinowitsch 变量消元",
    )
    verify_bases: bool = Field(
        default=False,
        description="每次得到基后检查所有 S 多项式约化为零",
    )
    cross_check_oracles: bool = Field(
        default=False,
        description="用整体准素分支重新计算 μ/τ 并比对",
    )
    workers: int = Field(
        default=1,
        description="逐点分析的线程数",
        ge=1,
        le=64,
    )


class AnalysisConfig(BaseModel):
    """分析流程配置"""

    direct_rees: bool = Field(
        default=False,
        description="是否直接比较 Rees 理想与对称代数理想（大输入很慢）",
    )
    chart_preference: list[str] = Field(
        default_factory=list,
        description="射影点优先使用的仿射卡（变量名列表）",
    )

    @field_validator("chart_preference")
    @classmethod
    def validate_chart_names(cls, v: list[str]) -> list[str]:
        """卡名不能重复"""
        if len(set(v)) != len(v):
            raise ValueError(f"chart_preference contains duplicates: {v}")
        return v


class ReportConfig(BaseModel):
    """报告输出配置"""

    indent: int = Field(default=2, description="JSON 缩进", ge=0, le=8)


class Config(BaseModel):
    """主配置"""

    engine: EngineConfig = Field(default_factory=lambda: EngineConfig())
    analysis: AnalysisConfig = Field(default_factory=lambda: AnalysisConfig())
    report: ReportConfig = Field(default_factory=lambda: ReportConfig())


class EnvironmentSettings(BaseSettings):
    """环境变量配置（GRADLIN_ 前缀，优先级高于 YAML）"""

    max_terms: int | None = None
    max_pairs: int | None = None
    saturation_cap: int | None = None
    verify_bases: bool | None = None
    workers: int | None = None

    model_config = SettingsConfigDict(
        env_prefix="GRADLIN_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


def load_yaml_config(config_path: str) -> dict[str, Any]:
    """
    加载 YAML 配置文件

    支持 extends 字段继承同目录下的另一个配置文件（可多级）。

    Args:
        config_path: 配置文件路径

    Returns:
        Dict[str, Any]: 配置字典
    """
    config_file = Path(config_path)

    if not config_file.exists():
        raise FileNotFoundError(f"Config file not found: {config_path}")

    with open(config_file, encoding="utf-8") as f:
        config = cast(dict[str, Any], yaml.safe_load(f) or {})

    logger.debug("yaml_config_loaded", path=config_path)

    if "extends" in config:
        base_config = load_yaml_config(str(config_file.parent / config["extends"]))
        config = merge_configs(base_config, config)
        logger.debug("merged_with_base_config", base=config["extends"])

    return config


def merge_configs(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    """
    深度合并配置字典

    Args:
        base: 基础配置
        override: 覆盖配置

    Returns:
        Dict[str, Any]: 合并后的配置（不含 extends 键）
    """
    merged = {k: v for k, v in base.items() if k != "extends"}

    for key, value in override.items():
        if key == "extends":
            continue

        if key in merged and isinstance(merged[key], dict) and isinstance(value, dict):
            merged[key] = merge_configs(merged[key], value)
        else:
            merged[key] = value

    return merged


def load_config(config_path: str | None = "config/base.yaml") -> Config:
    """
    加载完整配置（YAML + 环境变量）

    Args:
        config_path: YAML 配置文件路径；None 表示只用默认值和环境变量

    Returns:
        Config: 配置对象
    """
    yaml_config = load_yaml_config(config_path) if config_path else {}

    env_settings = EnvironmentSettings()
    engine_yaml = dict(yaml_config.get("engine", {}))
    for key, value in env_settings.model_dump().items():
        if value is not None:
            engine_yaml[key] = value

    config = Config(
        engine=EngineConfig(**engine_yaml),
        analysis=AnalysisConfig(**yaml_config.get("analysis", {})),
        report=ReportConfig(**yaml_config.get("report", {})),
    )

    logger.info(
        "config_loaded",
        path=config_path,
        max_terms=config.engine.max_terms,
        saturation_cap=config.engine.saturation_cap,
    )

    return config


# ==================== 当前引擎配置 ====================

_engine_lock = threading.Lock()
_active_engine = EngineConfig()


def get_engine_config() -> EngineConfig:
    """返回当前生效的引擎配置"""
    return _active_engine


def set_engine_config(engine: EngineConfig) -> None:
    """替换当前引擎配置"""
    global _active_engine
    with _engine_lock:
        _active_engine = engine


@contextmanager
def engine_overrides(**overrides: Any) -> Iterator[EngineConfig]:
    """临时覆盖引擎配置中的若干字段

    Example:
        >>> with engine_overrides(max_terms=10):
        ...     ...
    """
    previous = get_engine_config()
    updated = EngineConfig(**{**previous.model_dump(), **overrides})
    set_engine_config(updated)
    try:
        yield updated
    finally:
        set_engine_config(previous)
