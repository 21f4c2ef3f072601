"""
sr-pair 收集速率基准

对每个采样器独立运行多次收集循环（不因分解成功提前停止），
记录每次测量后累计的唯一 sr-pair 数，输出平均曲线与达到 B2 + 1 所需测量数。
"""

import csv
import logging
import math
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from schnorr_qaoa.config import AppConfig
from schnorr_qaoa.errors import InvalidInputError
from schnorr_qaoa.lattice.prime_lattice import Permutation
from schnorr_qaoa.logging_config import LogContext
from schnorr_qaoa.pipeline.factoring import FactoringRun
from schnorr_qaoa.pipeline.run_config import RunConfig
from schnorr_qaoa.pipeline.samplers import make_sampler

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["sampler", "shot_index", "mean_pairs", "trials"]


@dataclass(frozen=True)
class CollectionCurve:
    """
    平均收集曲线

    Attributes:
        sampler: 采样器名称
        trials: 试验次数
        mean_pairs: 第 k+1 次测量后唯一 sr-pair 数的平均值
        shots_to_threshold: 每次试验首次达到 threshold 的测量序号（未达到为 None）
        threshold: B2 + 1
        budget: 每次试验的测量预算；未达到阈值的试验按该值计入统计
    """

    sampler: str
    trials: int
    mean_pairs: tuple[float, ...]
    shots_to_threshold: tuple[int | None, ...]
    threshold: int
    budget: int

    @property
    def completion_rate(self) -> float:
        reached = [s for s in self.shots_to_threshold if s is not None]
        return len(reached) / len(self.shots_to_threshold) if self.shots_to_threshold else 0.0

    def _censored_shots(self) -> list[int]:
        return [self.budget if s is None else s for s in self.shots_to_threshold]

    @property
    def mean_shots_to_threshold(self) -> float | None:
        """平均测量数，未达到阈值的试验记为 budget"""
        shots = self._censored_shots()
        return float(np.mean(shots)) if shots else None

    @property
    def stderr_shots_to_threshold(self) -> float | None:
        shots = self._censored_shots()
        if len(shots) < 2:
            return None
        return float(np.std(shots, ddof=1) / math.sqrt(len(shots)))


def collect_trajectory(config: RunConfig, sampler_name: str, seed: np.random.SeedSequence | int) -> list[int]:
    """
    单次收集轨迹

    Args:
        config: 运行配置（max_circuits × shots_per_circuit 为测量预算）
        sampler_name: emulator / uniform
        seed: 随机种子

    Returns:
        list[int]: 每次测量后的唯一 sr-pair 数，长度等于测量预算
    """
    run = FactoringRun(config, attempt_factoring=False, verbose=False)
    sampler = make_sampler(sampler_name)
    rng = np.random.default_rng(seed)
    budget = config.max_circuits * config.shots_per_circuit

    counts: list[int] = []
    circuit_index = 0
    while len(counts) < budget:
        circuit_index += 1
        steps = run.run_circuit(circuit_index, Permutation.random(config.n, rng), sampler, rng)
        counts.extend(s.n_pairs for s in steps)
    return counts[:budget]


def _first_reaching(counts: Sequence[int], threshold: int) -> int | None:
    for shot_index, count in enumerate(counts, start=1):
        if count >= threshold:
            return shot_index
    return None


def _trial_task(args: tuple[RunConfig, str, np.random.SeedSequence]) -> list[int]:
    config, sampler_name, seed = args
    return collect_trajectory(config, sampler_name, seed)


def benchmark_collection_rate(
    config: RunConfig,
    samplers: Sequence[str],
    trials: int,
    out_path: str | Path | None = None,
    workers: int | None = None,
) -> list[CollectionCurve]:
    """
    比较各采样器的 sr-pair 收集速率

    Args:
        config: 运行配置
        samplers: 采样器名称列表
        trials: 每个采样器的试验次数（≥ 1）
        out_path: CSV 输出路径（可选）
        workers: 并行进程数，默认取 APP_WORKERS

    Returns:
        list[CollectionCurve]: 与 samplers 同序的曲线
    """
    if trials < 1:
        raise InvalidInputError(f"trials 必须 ≥ 1，收到 {trials}")
    if not samplers:
        raise InvalidInputError("至少需要一个采样器")
    workers = workers or AppConfig.workers

    seeds = np.random.SeedSequence(config.seed).spawn(len(samplers) * trials)
    tasks = [
        (config, name, seeds[i * trials + t]) for i, name in enumerate(samplers) for t in range(trials)
    ]

    with LogContext(logger, f"收集速率基准 N={config.N}, 采样器={list(samplers)}, trials={trials}"):
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                trajectories = list(pool.map(_trial_task, tasks))
        else:
            trajectories = [_trial_task(task) for task in tasks]

    curves = []
    for i, name in enumerate(samplers):
        group = np.array(trajectories[i * trials : (i + 1) * trials], dtype=float)
        curve = CollectionCurve(
            sampler=name,
            trials=trials,
            mean_pairs=tuple(float(x) for x in group.mean(axis=0)),
            shots_to_threshold=tuple(
                _first_reaching(t, config.threshold) for t in trajectories[i * trials : (i + 1) * trials]
            ),
            threshold=config.threshold,
            budget=config.max_circuits * config.shots_per_circuit,
        )
        mean_shots = curve.mean_shots_to_threshold
        logger.info(
            f"   {name}: 最终平均 {curve.mean_pairs[-1]:.2f} 个 sr-pair, "
            f"达到 {config.threshold} 个的比例 {curve.completion_rate:.0%}, "
            f"平均测量数 {mean_shots if mean_shots is not None else '-'}"
        )
        curves.append(curve)

    if out_path is not None:
        write_curves_csv(curves, out_path)
    return curves


def write_curves_csv(curves: Sequence[CollectionCurve], path: str | Path) -> None:
    """写出 CSV：sampler, shot_index, mean_pairs, trials"""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f)
            writer.writerow(CSV_COLUMNS)
            for curve in curves:
                for shot_index, mean in enumerate(curve.mean_pairs, start=1):
                    writer.writerow([curve.sampler, shot_index, f"{mean:.6f}", curve.trials])
        logger.info(f"✅ 写出基准 CSV: {path}")
    except Exception as e:
        logger.error(f"❌ 写出基准 CSV 失败: {e}", exc_info=True)
        raise


def separated_by_stderr(faster: CollectionCurve, slower: CollectionCurve) -> bool:
    """
    faster 的平均测量数是否显著更少（均值 ± 标准误区间不重叠）

    未达到阈值的试验按预算计入均值；faster 必须全部试验都达到阈值，
    任一方没有可用统计时返回 False。
    """
    a, b = faster.mean_shots_to_threshold, slower.mean_shots_to_threshold
    sa, sb = faster.stderr_shots_to_threshold, slower.stderr_shots_to_threshold
    if faster.completion_rate < 1.0:
        return False
    if a is None or b is None or sa is None or sb is None:
        return False
    return a + sa < b - sb
