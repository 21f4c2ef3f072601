"""
运行配置

默认值对应 N = 1591、n = 6 的参考配置；格与 QAOA 参数默认取自环境配置。
"""

from fractions import Fraction
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator, model_validator

from schnorr_qaoa.config import AppConfig, LatticeConfig, QaoaConfig
from schnorr_qaoa.qaoa.circuit import QaoaAngles
from schnorr_qaoa.utils.rational import to_fraction

SamplerName = Literal["emulator", "uniform", "replay"]

# n = 6 时的线路预算，之后每多一个比特翻倍
BASE_MAX_CIRCUITS = 200
BASE_QUBITS = 6


def default_max_circuits(n: int) -> int:
    """按比特数给出的默认线路预算：n ≤ 6 为 200，n = 10 为 3200"""
    return BASE_MAX_CIRCUITS * 2 ** max(0, n - BASE_QUBITS)


class RunConfig(BaseModel):
    """一次分解运行的全部参数"""

    model_config = ConfigDict(frozen=True)

    N: int = Field(default=1591, ge=2, description="被分解的整数")
    n: int = Field(default=6, ge=2, description="量子比特数 = 主因子基大小 B1")
    b2: int = Field(default=11, description="扩展因子基大小 B2")
    c: float = Field(default_factory=lambda: LatticeConfig.c, gt=0)
    delta: float = Field(default_factory=lambda: LatticeConfig.delta)
    babai_variant: Literal["nearest_plane", "rounding"] = Field(
        default_factory=lambda: LatticeConfig.babai_variant
    )
    shots_per_circuit: int = Field(default=5, ge=1, description="每条线路的测量次数 N_sh")
    gamma: float = Field(default_factory=lambda: QaoaConfig.gamma)
    beta: float = Field(default_factory=lambda: QaoaConfig.beta)
    rz_sign: Literal[1, -1] = Field(default_factory=lambda: QaoaConfig.rz_sign)
    mixer_sign: Literal[1, -1] = Field(default_factory=lambda: QaoaConfig.mixer_sign)
    sampler: SamplerName = "emulator"
    seed: int = Field(default_factory=lambda: AppConfig.seed)
    max_circuits: int = Field(
        default=BASE_MAX_CIRCUITS, ge=1, description="线路数上限，缺省时按 n 取 default_max_circuits"
    )
    readout_complement: bool = Field(
        default=False, description="回放比特串按位取反（硬件读出约定）"
    )
    record_path: str | None = None
    trace_path: str | None = None

    @model_validator(mode="before")
    @classmethod
    def _default_budget(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("max_circuits") is None:
            n = data.get("n", BASE_QUBITS)
            if isinstance(n, int):
                data = {**data, "max_circuits": default_max_circuits(n)}
        return data

    @field_validator("b2")
    @classmethod
    def _check_b2(cls, value: int, info: ValidationInfo) -> int:
        n = info.data.get("n")
        if n is not None and value < n:
            raise ValueError(f"b2 必须 ≥ n，收到 b2={value}, n={n}")
        return value

    @field_validator("delta")
    @classmethod
    def _check_delta(cls, value: float) -> float:
        if not 0.25 < value < 1:
            raise ValueError(f"delta 必须满足 1/4 < δ < 1，收到 {value}")
        return value

    @property
    def angles(self) -> QaoaAngles:
        return QaoaAngles(gamma=self.gamma, beta=self.beta)

    @property
    def c_fraction(self) -> Fraction:
        return to_fraction(self.c)

    @property
    def delta_fraction(self) -> Fraction:
        return to_fraction(self.delta)

    @property
    def threshold(self) -> int:
        """保证可分解的 sr-pair 数量 B2 + 1"""
        return self.b2 + 1
