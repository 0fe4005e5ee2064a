"""Pytest 配置和通用 fixtures"""

import logging
import os
from collections.abc import Callable, Iterator
from pathlib import Path

import pytest
import structlog

from src.core.config import EngineConfig, get_engine_config, set_engine_config
from src.core.logging import setup_logging
from src.core.parser import parse_polynomial
from src.core.polynomial import Polynomial, RingContext

# ==================== 环境 Fixtures ====================


@pytest.fixture(autouse=True, scope="session")
def quiet_logging() -> Iterator[None]:
    """测试期间只输出 WARNING 以上日志（stderr），关闭审计日志"""
    previous = {k: os.environ.get(k) for k in ("LOG_LEVEL", "ENABLE_AUDIT_LOG", "LOG_DIR")}
    os.environ["LOG_LEVEL"] = "WARNING"
    os.environ["ENABLE_AUDIT_LOG"] = "false"
    os.environ.pop("LOG_DIR", None)
    setup_logging()
    yield
    for key, value in previous.items():
        if value is None:
            os.environ.pop(key, None)
        else:
            os.environ[key] = value


@pytest.fixture
def isolated_logging(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Iterator[Path]:
    """
    为单个测试提供隔离的日志系统环境

    清空 root logger 的处理器、放开环境变量覆盖并提供临时日志目录；
    测试结束后恢复原来的处理器与 structlog 配置。
    """
    original_handlers = logging.root.handlers[:]
    original_level = logging.root.level
    original_config = structlog.get_config()
    for handler in original_handlers:
        logging.root.removeHandler(handler)

    monkeypatch.delenv("LOG_LEVEL", raising=False)
    monkeypatch.delenv("ENABLE_AUDIT_LOG", raising=False)
    monkeypatch.delenv("LOG_DIR", raising=False)
    log_dir = tmp_path / "logs"

    yield log_dir

    for handler in logging.root.handlers[:]:
        handler.flush()
        handler.close()
        logging.root.removeHandler(handler)
    for handler in logging.getLogger("audit").handlers[:]:
        handler.close()
        logging.getLogger("audit").removeHandler(handler)
    for handler in original_handlers:
        logging.root.addHandler(handler)
    logging.root.setLevel(original_level)
    structlog.configure(**original_config)


@pytest.fixture(autouse=True)
def default_engine() -> Iterator[EngineConfig]:
    """每个测试使用默认引擎配置（打开基验证）"""
    previous = get_engine_config()
    engine = EngineConfig(verify_bases=True)
    set_engine_config(engine)
    yield engine
    set_engine_config(previous)


# ==================== 环 Fixtures ====================


@pytest.fixture
def ring_x() -> RingContext:
    return RingContext.of("x")


@pytest.fixture
def ring_xy() -> RingContext:
    return RingContext.of("x", "y")


@pytest.fixture
def ring_xyz() -> RingContext:
    return RingContext.of("x", "y", "z")


@pytest.fixture
def ring_xyzw() -> RingContext:
    return RingContext.of("x", "y", "z", "w")


# ==================== 多项式 Fixtures ====================


@pytest.fixture
def poly() -> Callable[[str, RingContext], Polynomial]:
    """按文本构造多项式：poly("y^2 - x^3", ring)"""
    return parse_polynomial


@pytest.fixture
def sextic(ring_xyz: RingContext) -> Polynomial:
    """射影六次曲线 (x²−y²)³−x²y²z²"""
    return parse_polynomial("(x^2-y^2)^3 - x^2*y^2*z^2", ring_xyz)


@pytest.fixture
def cubic_surface(ring_xyzw: RingContext) -> Polynomial:
    """三次曲面 xzw+x²y+y²z−z³"""
    return parse_polynomial("x*z*w + x^2*y + y^2*z - z^3", ring_xyzw)


@pytest.fixture
def non_eulerian_curve(ring_xy: RingContext) -> Polynomial:
    """x⁵−y⁶+x³y⁴：原点处不是局部 Euler 的"""
    return parse_polynomial("x^5 - y^6 + x^3*y^4", ring_xy)
