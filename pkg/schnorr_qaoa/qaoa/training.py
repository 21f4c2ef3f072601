"""
固定角度训练

在训练集（归一化 QUBO 列表）上最大化 min P_q/P_c。
先在 (γ, β) 粗网格上扫描，再从得分最高的若干网格点出发运行 (1+1) 进化策略：
高斯变异、改进即接受、连续失败后步长减半。
β 以 π 为周期回绕（Rx(2β+2π) 只差全局相位），γ 在区间端点处反射。
"""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from pydantic import BaseModel, Field, model_validator

from schnorr_qaoa.config import AppConfig
from schnorr_qaoa.errors import InvalidInputError
from schnorr_qaoa.lattice.qubo import QuboProblem
from schnorr_qaoa.qaoa.circuit import QaoaAngles, as_qubo_matrix, qubo_to_circuit
from schnorr_qaoa.qaoa.statevector import simulate_statevector

logger = logging.getLogger(__name__)

# 判定 QUBO 最优解时的能量容差
OPTIMUM_TOLERANCE = 1e-9

QuboLike = QuboProblem | np.ndarray | Sequence[Sequence[float]]


# ============================================================================
# 数据模型
# ============================================================================


class SearchConfig(BaseModel):
    """网格扫描 + (1+1) 进化策略参数"""

    seed: int = Field(default_factory=lambda: AppConfig.seed)
    sigma0: float = Field(default=0.3, gt=0, description="初始变异步长（弧度）")
    patience: int = Field(default=20, ge=1, description="连续失败多少次后步长减半")
    restarts: int = Field(default=5, ge=1, description="重启次数")
    evaluations_per_restart: int = Field(default=150, ge=1)
    min_sigma: float = Field(default=1e-3, gt=0, description="步长低于该值时提前结束本次重启")
    gamma_range: tuple[float, float] = (0.0, 2 * math.pi)
    beta_range: tuple[float, float] = (0.0, math.pi)
    grid_points: tuple[int, int] | None = Field(
        default=(24, 12), description="粗网格的 (γ, β) 点数，None 表示跳过扫描、随机起点"
    )
    initial_point: tuple[float, float] | None = Field(
        default=None, description="第一次重启的起点 (γ, β)，缺省时取网格最优点"
    )

    @model_validator(mode="after")
    def _check_ranges(self) -> "SearchConfig":
        for name in ("gamma_range", "beta_range"):
            low, high = getattr(self, name)
            if not low < high:
                raise ValueError(f"{name} 必须满足 low < high，收到 ({low}, {high})")
        if self.grid_points is not None and min(self.grid_points) < 1:
            raise ValueError(f"grid_points 必须为正，收到 {self.grid_points}")
        return self


@dataclass(frozen=True)
class TrainingMetric:
    """
    训练指标

    Attributes:
        p_q: 线路输出落在 QUBO 最优比特串上的概率
        p_c: 最优比特串个数 / 2^n
        ratio: p_q / p_c
    """

    p_q: float
    p_c: float
    ratio: float


@dataclass(frozen=True)
class TrainingReport:
    """训练结果"""

    angles: QaoaAngles
    best_score: float
    initial_score: float
    evaluations: int
    restarts: int


# ============================================================================
# 指标
# ============================================================================


def _matrix_of(qubo: QuboLike) -> np.ndarray:
    if isinstance(qubo, QuboProblem):
        return qubo.as_array()
    return as_qubo_matrix(qubo)


def qubo_energies(qnorm: QuboLike) -> np.ndarray:
    """
    全部 2^n 个赋值的能量 Σ_{i≤j} Q_ij x_i x_j

    下标 k 的二进制表示即赋值，第 1 个变量为最高位。
    """
    matrix = _matrix_of(qnorm)
    n = matrix.shape[0]
    indices = np.arange(2**n)
    shifts = np.arange(n - 1, -1, -1)
    bits = ((indices[:, None] >> shifts[None, :]) & 1).astype(float)
    return np.einsum("ki,ij,kj->k", bits, np.triu(matrix), bits)


def training_metric(
    qnorm: QuboLike,
    angles: QaoaAngles,
    rz_sign: int | None = None,
    mixer_sign: int | None = None,
) -> TrainingMetric:
    """
    计算单个 QUBO 上的 P_q/P_c

    Args:
        qnorm: 归一化 QUBO
        angles: QAOA 角度
        rz_sign: Rz 相位符号
        mixer_sign: 混合层符号

    Returns:
        TrainingMetric: 指标
    """
    matrix = _matrix_of(qnorm)
    energies = qubo_energies(matrix)
    optimal = energies <= energies.min() + OPTIMUM_TOLERANCE
    p_c = float(optimal.sum()) / len(energies)

    circuit = qubo_to_circuit(matrix, angles, rz_sign=rz_sign, mixer_sign=mixer_sign)
    p_q = float(simulate_statevector(circuit).probabilities[optimal].sum())
    return TrainingMetric(p_q=p_q, p_c=p_c, ratio=p_q / p_c)


# ============================================================================
# 训练器
# ============================================================================


class FixedAngleTrainer:
    """
    固定角度训练器

    目标函数为训练集上 P_q/P_c 的最小值。
    """

    def __init__(
        self,
        config: SearchConfig | None = None,
        rz_sign: int | None = None,
        mixer_sign: int | None = None,
    ):
        self.config = config or SearchConfig()
        self.rz_sign = rz_sign
        self.mixer_sign = mixer_sign
        self.evaluations = 0

    def score(self, training_set: Sequence[np.ndarray], gamma: float, beta: float) -> float:
        """训练集上的最小比值"""
        self.evaluations += 1
        angles = QaoaAngles(gamma=gamma, beta=beta)
        return min(
            training_metric(q, angles, rz_sign=self.rz_sign, mixer_sign=self.mixer_sign).ratio
            for q in training_set
        )

    def fold(self, point: np.ndarray) -> np.ndarray:
        """把点折回搜索区域：β 周期回绕，γ 端点反射"""
        cfg = self.config
        g_low, g_high = cfg.gamma_range
        b_low, b_high = cfg.beta_range
        width = g_high - g_low
        offset = np.mod(point[0] - g_low, 2 * width)
        if offset > width:
            offset = 2 * width - offset
        beta = b_low + np.mod(point[1] - b_low, b_high - b_low)
        return np.array([g_low + offset, beta])

    def grid_scan(self, training_set: Sequence[np.ndarray]) -> list[tuple[float, np.ndarray]]:
        """粗网格扫描，按得分从高到低返回 (score, point)"""
        cfg = self.config
        if cfg.grid_points is None:
            return []
        gammas = np.linspace(*cfg.gamma_range, cfg.grid_points[0], endpoint=False)
        betas = np.linspace(*cfg.beta_range, cfg.grid_points[1], endpoint=False)
        scored = [
            (self.score(training_set, g, b), np.array([g, b])) for g in gammas for b in betas
        ]
        scored.sort(key=lambda item: -item[0])
        return scored

    def _start_points(
        self, ranked: list[tuple[float, np.ndarray]], rng: np.random.Generator
    ) -> list[np.ndarray]:
        cfg = self.config
        points: list[np.ndarray] = []
        if cfg.initial_point is not None:
            points.append(self.fold(np.array(cfg.initial_point, dtype=float)))
        for _, point in ranked:
            if len(points) >= cfg.restarts:
                break
            points.append(point)
        while len(points) < cfg.restarts:
            points.append(np.array([rng.uniform(*cfg.gamma_range), rng.uniform(*cfg.beta_range)]))
        return points

    def train(self, training_set: Sequence[QuboLike]) -> TrainingReport:
        """
        运行网格扫描与 (1+1) 进化策略

        Args:
            training_set: 非空的归一化 QUBO 列表

        Returns:
            TrainingReport: 最优角度与评估统计
        """
        if not training_set:
            raise InvalidInputError("训练集不能为空")
        matrices = [_matrix_of(q) for q in training_set]
        cfg = self.config
        rng = np.random.default_rng(cfg.seed)
        self.evaluations = 0

        logger.info(
            f"开始训练固定角度: 训练集 {len(matrices)} 个 QUBO, 网格 {cfg.grid_points}, "
            f"σ0={cfg.sigma0}, 重启 {cfg.restarts} 次"
        )

        ranked = self.grid_scan(matrices)
        if ranked:
            top_score, top_point = ranked[0]
            logger.debug(f"   网格最优: γ={top_point[0]:.4f}, β={top_point[1]:.4f}, score={top_score:.4f}")

        best_point: np.ndarray | None = None
        best_score = -math.inf
        initial_score = math.nan

        for restart, point in enumerate(self._start_points(ranked, rng)):
            current = self.score(matrices, *point)
            if restart == 0:
                initial_score = current
            sigma = cfg.sigma0
            failures = 0

            for _ in range(cfg.evaluations_per_restart - 1):
                if sigma < cfg.min_sigma:
                    break
                candidate = self.fold(point + rng.normal(0.0, sigma, size=2))
                value = self.score(matrices, *candidate)
                if value > current:
                    point, current = candidate, value
                    failures = 0
                else:
                    failures += 1
                    if failures >= cfg.patience:
                        sigma /= 2
                        failures = 0

            logger.debug(
                f"   重启 {restart + 1}/{cfg.restarts}: γ={point[0]:.4f}, β={point[1]:.4f}, "
                f"min P_q/P_c={current:.4f}"
            )
            if current > best_score:
                best_point, best_score = point, current

        assert best_point is not None
        angles = QaoaAngles(gamma=float(best_point[0]), beta=float(best_point[1]))
        logger.info(
            f"✅ 训练完成: γ={angles.gamma:.4f}, β={angles.beta:.4f}, "
            f"min P_q/P_c={best_score:.4f}（起点 {initial_score:.4f}），评估 {self.evaluations} 次"
        )
        return TrainingReport(
            angles=angles,
            best_score=best_score,
            initial_score=initial_score,
            evaluations=self.evaluations,
            restarts=cfg.restarts,
        )


def train_fixed_angles(
    training_set: Sequence[QuboLike], search_config: SearchConfig | None = None
) -> QaoaAngles:
    """训练固定角度，仅返回 (γ, β)"""
    return FixedAngleTrainer(search_config).train(training_set).angles
