"""
日志配置模块

为分解流水线与命令行工具提供统一的日志配置。
支持控制台输出和文件输出，可通过环境变量配置日志级别。
"""

import logging
import sys
from collections import Counter
from datetime import datetime
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import TYPE_CHECKING

from schnorr_qaoa.config import AppConfig

if TYPE_CHECKING:
    from schnorr_qaoa.pipeline.records import StepRecord
    from schnorr_qaoa.qaoa.circuit import CircuitIR


def setup_logging(
    log_level: str | None = None,
    log_dir: str | None = None,
    log_to_file: bool | None = None,
) -> logging.Logger:
    """
    配置日志系统

    Args:
        log_level: 日志级别 (DEBUG/INFO/WARNING/ERROR)，默认从 APP_LOG_LEVEL 读取
        log_dir: 日志目录路径，默认从 APP_LOG_DIR 读取
        log_to_file: 是否写日志文件，默认从 APP_LOG_TO_FILE 读取

    Returns:
        logging.Logger: 配置好的 logger 实例
    """
    level_name = (log_level or AppConfig.log_level).upper()
    level = getattr(logging, level_name)
    if log_to_file is None:
        log_to_file = AppConfig.log_to_file

    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    # 清除已有的 handlers（避免重复）
    root_logger.handlers.clear()

    detailed_formatter = logging.Formatter(
        fmt="%(asctime)s - %(name)s - %(levelname)s - [%(filename)s:%(lineno)d] - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )
    simple_formatter = logging.Formatter(
        fmt="%(asctime)s - %(levelname)s - %(message)s", datefmt="%H:%M:%S"
    )

    # 控制台 Handler（日志走 stderr，stdout 留给结果摘要）
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(simple_formatter)
    root_logger.addHandler(console_handler)

    log_filepath: Path | None = None
    if log_to_file:
        log_dir_path = Path(log_dir or AppConfig.log_dir)
        log_dir_path.mkdir(parents=True, exist_ok=True)
        log_filepath = log_dir_path / f"schnorr_qaoa_{datetime.now().strftime('%Y%m%d')}.log"

        # 文件 Handler（详细格式，支持日志轮转）
        file_handler = RotatingFileHandler(
            log_filepath,
            maxBytes=10 * 1024 * 1024,  # 10MB
            backupCount=5,
            encoding="utf-8",
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(detailed_formatter)
        root_logger.addHandler(file_handler)

    app_logger = logging.getLogger("schnorr_qaoa")
    app_logger.debug("=" * 80)
    app_logger.debug("日志系统已初始化")
    app_logger.debug(f"日志级别: {level_name}")
    app_logger.debug(f"日志文件: {log_filepath if log_filepath else '未启用'}")
    app_logger.debug("=" * 80)

    return app_logger


def get_logger(name: str) -> logging.Logger:
    """
    获取指定名称的 logger

    Args:
        name: logger 名称

    Returns:
        logging.Logger: logger 实例
    """
    return logging.getLogger(name)


class LogContext:
    """
    日志上下文管理器

    用于记录代码块的执行时间和状态。
    """

    def __init__(self, logger: logging.Logger, operation: str, level: int = logging.INFO):
        """
        初始化日志上下文

        Args:
            logger: logger 实例
            operation: 操作描述
            level: 日志级别
        """
        self.logger = logger
        self.operation = operation
        self.level = level
        self.start_time: datetime | None = None
        self.elapsed: float = 0.0

    def __enter__(self):
        """进入上下文"""
        self.start_time = datetime.now()
        self.logger.log(self.level, f"开始: {self.operation}")
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        """退出上下文"""
        if self.start_time is None:
            return False
        self.elapsed = (datetime.now() - self.start_time).total_seconds()

        if exc_type is None:
            self.logger.log(self.level, f"完成: {self.operation} (耗时: {self.elapsed:.2f}s)")
        else:
            self.logger.error(
                f"失败: {self.operation} (耗时: {self.elapsed:.2f}s) - {exc_type.__name__}: {exc_val}",
                exc_info=True,
            )

        return False  # 不抑制异常


def log_circuit_summary(logger: logging.Logger, circuit_index: int, circuit: "CircuitIR"):
    """
    记录一条线路的门统计信息

    Args:
        logger: logger 实例
        circuit_index: 线路编号（从 1 开始）
        circuit: 线路
    """
    counts = Counter(gate.name for gate in circuit.gates)
    parts = [f"线路 {circuit_index}: qubits={circuit.n}"]
    parts.extend(f"{name}={count}" for name, count in sorted(counts.items()))
    logger.info(", ".join(parts))
    for gate in circuit.gates:
        logger.debug(f"   [线路 {circuit_index}] {gate.name} {gate.qubits} {gate.angle:+.6f}")


def log_step(logger: logging.Logger, step: "StepRecord"):
    """
    记录一个分解步骤（对应步骤表的一行）

    Args:
        logger: logger 实例
        step: 步骤记录
    """
    pair = f"({step.sr_pair[0]}, {step.sr_pair[1]})" if step.sr_pair else "-"
    flag = "✅" if step.factored else ""
    logger.debug(
        f"步骤 {step.step:>4} | 置换 {tuple(step.permutation)} | 线路 {step.circuit:>3} | "
        f"{step.bitstring} | sr-pair {pair} | #sr-pairs {step.n_pairs} {flag}"
    )
