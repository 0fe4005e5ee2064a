"""日志系统配置

- 控制台日志（彩色格式，输出到 stderr，stdout 留给 JSON 报告）
- 文件日志（JSON 格式，按日轮转，仅在指定日志目录时启用）
- 审计日志（每个线性型结论一条记录）
- 环境变量配置支持
"""

import logging
import logging.handlers
import os
import sys
from pathlib import Path

import structlog

_CONSOLE_HANDLER_NAME = "gradlin_console"
_FILE_HANDLER_NAME = "gradlin_file"


def _remove_named_handlers(logger: logging.Logger, name: str) -> None:
    for handler in [h for h in logger.handlers if h.get_name() == name]:
        logger.removeHandler(handler)
        handler.close()


def _shared_pre_chain() -> list[structlog.types.Processor]:
    return [
        structlog.stdlib.add_log_level,
        structlog.processors.TimeStamper(fmt="iso"),
    ]


def _json_formatter() -> structlog.stdlib.ProcessorFormatter:
    return structlog.stdlib.ProcessorFormatter(
        foreign_pre_chain=_shared_pre_chain(),
        processors=[
            structlog.stdlib.ProcessorFormatter.remove_processors_meta,
            structlog.processors.JSONRenderer(),
        ],
    )


def setup_logging(
    log_level: str | None = None,
    log_dir: str | None = None,
    retention_days: int = 30,
    enable_audit: bool = True,
) -> None:
    """
    配置完整的日志系统

    Args:
        log_level: 日志级别（DEBUG/INFO/WARNING/ERROR/CRITICAL）
        log_dir: 日志目录路径；为空时只输出到控制台
        retention_days: 日志保留天数
        enable_audit: 是否启用审计日志（需要日志目录）
    """
    # 环境变量优先级高于参数
    log_level = os.getenv("LOG_LEVEL", log_level or "INFO").upper()
    log_dir = os.getenv("LOG_DIR", log_dir or "") or None
    retention_days = int(os.getenv("LOG_RETENTION_DAYS", str(retention_days)))
    enable_audit_env = os.getenv("ENABLE_AUDIT_LOG")
    if enable_audit_env is not None:
        enable_audit = enable_audit_env.lower() in ("true", "1", "yes")

    level = getattr(logging, log_level)

    # 不使用 basicConfig()：它只在首次调用时生效，CLI 与测试会多次调用
    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    # 控制台处理器按名字替换，sys.stderr 可能已被替换（测试捕获、重定向）
    _remove_named_handlers(root_logger, _CONSOLE_HANDLER_NAME)
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.set_name(_CONSOLE_HANDLER_NAME)
    root_logger.addHandler(console_handler)
    console_handler.setLevel(level)

    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=False,
    )

    console_handler.setFormatter(
        structlog.stdlib.ProcessorFormatter(
            foreign_pre_chain=_shared_pre_chain(),
            processors=[
                structlog.stdlib.ProcessorFormatter.remove_processors_meta,
                structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty()),
            ],
        )
    )
    _remove_named_handlers(root_logger, _FILE_HANDLER_NAME)

    log_path: Path | None = None
    if log_dir:
        log_path = Path(log_dir)
        log_path.mkdir(parents=True, exist_ok=True)
        file_handler = logging.handlers.TimedRotatingFileHandler(
            filename=log_path / "gradlin.log",
            when="midnight",
            interval=1,
            backupCount=retention_days,
            encoding="utf-8",
        )
        file_handler.set_name(_FILE_HANDLER_NAME)
        file_handler.suffix = "%Y%m%d"  # gradlin.log.20261018
        file_handler.setLevel(level)
        file_handler.setFormatter(_json_formatter())
        root_logger.addHandler(file_handler)

    audit_enabled = enable_audit and log_path is not None
    if audit_enabled and log_path is not None:
        _setup_audit_logging(log_path, retention_days)
    else:
        _silence_audit_logging()

    logger = structlog.get_logger(__name__)
    logger.debug(
        "logging_system_initialized",
        log_level=log_level,
        log_dir=str(log_path.absolute()) if log_path else None,
        retention_days=retention_days,
        audit_enabled=audit_enabled,
    )


def _setup_audit_logging(log_dir: Path, retention_days: int) -> None:
    """
    配置审计日志（每个线性型结论一条 JSON 记录）

    Args:
        log_dir: 日志目录
        retention_days: 保留天数
    """
    audit_logger = logging.getLogger("audit")
    for handler in list(audit_logger.handlers):
        audit_logger.removeHandler(handler)
        handler.close()

    audit_handler = logging.handlers.TimedRotatingFileHandler(
        filename=log_dir / "audit.log",
        when="midnight",
        interval=1,
        backupCount=retention_days,
        encoding="utf-8",
    )
    audit_handler.suffix = "%Y%m%d"
    audit_handler.setLevel(logging.INFO)
    audit_handler.setFormatter(_json_formatter())

    audit_logger.addHandler(audit_handler)
    audit_logger.setLevel(logging.INFO)
    # 不传播到 root logger（避免重复记录）
    audit_logger.propagate = False


def _silence_audit_logging() -> None:
    audit_logger = logging.getLogger("audit")
    for handler in list(audit_logger.handlers):
        audit_logger.removeHandler(handler)
        handler.close()
    audit_logger.addHandler(logging.NullHandler())
    audit_logger.propagate = False


def get_audit_logger() -> structlog.stdlib.BoundLogger:
    """
    获取审计日志记录器

    Example:
        >>> audit_logger = get_audit_logger()
        >>> audit_logger.info(
        ...     "linear_type_verdict",
        ...     name="sextic",
        ...     verdict=False,
        ...     methods=["locally-eulerian", "syzygy-codim"],
        ... )
    """
    return structlog.get_logger("audit")


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """
    获取模块日志记录器

    Example:
        >>> logger = get_logger(__name__)
        >>> logger.info("module_started", version="0.1.0")
    """
    return structlog.get_logger(name)


class LogLevel:
    """日志级别常量"""

    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"
