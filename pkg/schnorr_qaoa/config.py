"""
配置模块

定义格构造、QAOA 线路与应用运行的全部配置项。
格参数默认值对应 N = 1591、n = 6 的参考配置。
"""

from typing import Literal

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings

# 加载环境变量
load_dotenv()


class LatticeSettings(BaseSettings):
    """格与 CVP 配置"""

    c: float = Field(default=1.5, description="取整参数 c，最后一行为 round(10^c·ln p)")
    delta: float = Field(default=0.75, description="LLL 约化参数 δ")
    babai_variant: Literal["nearest_plane", "rounding"] = Field(
        default="nearest_plane",
        description="Babai 变体: nearest_plane（最近平面）/ rounding（基坐标取整）",
    )

    class Config:
        env_prefix = "LATTICE_"


class QaoaSettings(BaseSettings):
    """
    固定角度 QAOA 配置

    默认角度取自 n = 6 训练集 build_training_set(1591, 6, 10, seed=7) 上
    min P_q/P_c 的最优区域；复现角度表时显式使用 γ = 8/3、β = 0.33。
    """

    gamma: float = Field(default=2.41, description="问题角 γ")
    beta: float = Field(default=1.047, description="混合角 β，Rx 角度为 mixer_sign·2β")
    rz_sign: Literal[1, -1] = Field(default=1, description="Rz 相位符号约定")
    mixer_sign: Literal[1, -1] = Field(default=1, description="Rx 混合层符号约定")
    max_qubits: int = Field(default=24, description="态矢量模拟允许的最大比特数")

    class Config:
        env_prefix = "QAOA_"


class AppSettings(BaseSettings):
    """应用配置"""

    log_level: str = Field(default="INFO", description="日志级别")
    log_dir: str = Field(default="logs", description="日志目录")
    log_to_file: bool = Field(default=True, description="是否写日志文件")
    seed: int = Field(default=7, description="默认随机种子（CLI 未指定 --seed 时使用）")
    workers: int = Field(default=1, description="基准测试并行进程数")
    emulator_cache_size: int = Field(default=256, ge=1, description="模拟器缓存的输出分布个数上限")

    class Config:
        env_prefix = "APP_"


# 实例化配置
LatticeConfig = LatticeSettings()
QaoaConfig = QaoaSettings()
AppConfig = AppSettings()
