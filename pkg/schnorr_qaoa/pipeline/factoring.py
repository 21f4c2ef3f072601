"""
分解主流程

循环：随机置换 → 素数格 → LLL → Babai → QUBO → 线路 → 采样 →
候选向量 → sr-pair 校验 → 去重插入 → 平方同余尝试分解。
"""

import logging
from dataclasses import dataclass

import numpy as np

from schnorr_qaoa.errors import DegenerateQuboError, InvalidInputError
from schnorr_qaoa.lattice.babai import BabaiResult, babai_nearest_plane_ceil, babai_round_ceil
from schnorr_qaoa.lattice.lll import ReducedBasis, lll_reduce
from schnorr_qaoa.lattice.prime_lattice import Permutation, PrimeLattice, build_prime_lattice
from schnorr_qaoa.lattice.qubo import QuboProblem, build_qubo
from schnorr_qaoa.logging_config import LogContext, log_circuit_summary, log_step
from schnorr_qaoa.numtheory import first_primes, is_perfect_power, is_prime, small_factor
from schnorr_qaoa.pipeline.records import RunRecord, StepRecord
from schnorr_qaoa.pipeline.run_config import RunConfig
from schnorr_qaoa.pipeline.samplers import Sampler, make_sampler
from schnorr_qaoa.qaoa.circuit import CircuitIR, qubo_to_circuit
from schnorr_qaoa.relations.solver import FactorResult, try_factor
from schnorr_qaoa.relations.sr_pairs import (
    RelationSet,
    SrPair,
    bitstring_to_candidate,
    exponents_to_uv,
    verify_sr_pair,
)
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CvpInstance:
    """
    一个置换对应的完整 CVP 实例

    qubo / circuit 为 None 表示退化实例（残差为零或 QUBO 全零），
    此时只评估 Babai 向量本身。
    """

    sigma: Permutation
    lattice: PrimeLattice
    reduced: ReducedBasis
    babai: BabaiResult
    qubo: QuboProblem | None
    circuit: CircuitIR | None

    @property
    def is_degenerate(self) -> bool:
        return self.circuit is None


def prepare_instance(config: RunConfig, sigma: Permutation) -> CvpInstance:
    """
    为置换 σ 构造 CVP 实例并编译线路

    Args:
        config: 运行配置
        sigma: 置换

    Returns:
        CvpInstance: 实例
    """
    lattice = build_prime_lattice(config.N, first_primes(config.n), config.c_fraction, sigma)
    reduced = lll_reduce(lattice.basis, config.delta_fraction)
    if config.babai_variant == "rounding":
        babai = babai_round_ceil(reduced, lattice.target)
    else:
        babai = babai_nearest_plane_ceil(reduced, lattice.target)

    if not any(babai.residual):
        logger.debug(f"⚠️ 置换 {sigma} 的残差为零，跳过 QUBO")
        return CvpInstance(sigma, lattice, reduced, babai, qubo=None, circuit=None)
    try:
        qubo = build_qubo(babai, reduced)
    except DegenerateQuboError:
        logger.debug(f"⚠️ 置换 {sigma} 的 QUBO 退化，跳过")
        return CvpInstance(sigma, lattice, reduced, babai, qubo=None, circuit=None)

    circuit = qubo_to_circuit(
        qubo.normalized, config.angles, rz_sign=config.rz_sign, mixer_sign=config.mixer_sign
    )
    return CvpInstance(sigma, lattice, reduced, babai, qubo=qubo, circuit=circuit)


class FactoringRun:
    """
    一次分解运行的状态

    持有因子基、sr-pair 集合、运行记录与按置换缓存的实例；由单个循环顺序驱动。
    """

    def __init__(self, config: RunConfig, attempt_factoring: bool = True, verbose: bool = True):
        """
        Args:
            config: 运行配置
            attempt_factoring: 每插入一个新 sr-pair 后是否尝试分解
            verbose: 是否在 INFO 级别记录每条线路
        """
        self.config = config
        self.attempt_factoring = attempt_factoring
        self.verbose = verbose
        self.b1 = first_primes(config.n)
        self.b2 = first_primes(config.b2)
        self.relations = RelationSet(threshold=config.threshold)
        self.record = RunRecord()
        self.result: FactorResult | None = None
        self._instances: dict[Permutation, CvpInstance] = {}
        self._step = 0

    def instance(self, sigma: Permutation) -> CvpInstance:
        """按置换缓存的实例"""
        if sigma not in self._instances:
            self._instances[sigma] = prepare_instance(self.config, sigma)
        return self._instances[sigma]

    def candidate_pair(self, instance: CvpInstance, bitstring: str) -> SrPair | None:
        """比特串 → sr-pair（不光滑或平凡时为 None）"""
        e = bitstring_to_candidate(bitstring, instance.babai, instance.reduced, instance.lattice)
        u, v = exponents_to_uv(e, self.b1)
        return verify_sr_pair(u, v, self.config.N, self.b2, self.b1)

    def record_step(
        self, sigma: Permutation, circuit_index: int, bitstring: str, pair: SrPair | None
    ) -> StepRecord:
        """插入 sr-pair（若为新）、按需尝试分解，并追加一行记录"""
        self._step += 1
        is_new = pair is not None and self.relations.add(pair)
        if is_new and self.result is None and self.attempt_factoring:
            self.result = try_factor(self.relations, self.config.N, self.b1, self.b2)
            if self.result is not None:
                self.record.result = self.result

        step = StepRecord(
            step=self._step,
            permutation=list(sigma.sigma),
            circuit=circuit_index,
            bitstring=bitstring,
            sr_pair=pair.key if is_new and pair is not None else None,
            n_pairs=len(self.relations),
            factored=self.result is not None,
        )
        self.record.append(step)
        log_step(logger, step)
        return step

    def run_circuit(
        self, circuit_index: int, sigma: Permutation, sampler: Sampler, rng: np.random.Generator
    ) -> list[StepRecord]:
        """对一个置换采样 shots_per_circuit 次并处理全部结果"""
        instance = self.instance(sigma)
        if instance.circuit is None:
            bitstrings = ["0" * self.config.n]
        else:
            if self.verbose:
                log_circuit_summary(logger, circuit_index, instance.circuit)
            bitstrings = sampler.draw(instance.circuit, self.config.shots_per_circuit, rng)

        steps = []
        for bitstring in bitstrings:
            pair = self.candidate_pair(instance, bitstring)
            steps.append(self.record_step(sigma, circuit_index, bitstring, pair))
            if self.result is not None and self.attempt_factoring:
                break
        return steps


def trivial_split(N: int) -> FactorResult | None:
    """
    平凡情形守卫

    偶数、完全幂、含小素因子的 N 直接给出分解；N 为素数或 N < 4 时报错。

    Raises:
        InvalidInputError: N 不可分解
    """
    if N < 4:
        raise InvalidInputError(f"N 必须 ≥ 4，收到 {N}")
    if N % 2 == 0:
        return FactorResult.from_divisor(N, 2)
    power = is_perfect_power(N)
    if power is not None:
        return FactorResult.from_divisor(N, power[0])
    if is_prime(N):
        raise InvalidInputError(f"{N} 是素数，无法分解")
    return None


def factor(
    config: RunConfig, sampler: Sampler | None = None
) -> tuple[FactorResult | None, RunRecord]:
    """
    完整分解流程

    Args:
        config: 运行配置
        sampler: 采样器，默认按 config.sampler 创建

    Returns:
        (FactorResult | None, RunRecord): 分解结果与逐步记录
    """
    N = config.N
    trivial = trivial_split(N)
    if trivial is None:
        p = small_factor(N, first_primes(config.b2))
        if p is not None:
            trivial = FactorResult.from_divisor(N, p)
    if trivial is not None:
        logger.info(f"✅ 平凡分解: {trivial}")
        record = RunRecord(result=trivial)
        _save_record(config, record)
        return trivial, record

    if config.sampler == "replay":
        raise InvalidInputError("replay 采样器请使用 replay() 入口")
    sampler = sampler or make_sampler(config.sampler)
    rng = np.random.default_rng(config.seed)
    run = FactoringRun(config)

    logger.info(
        f"开始分解 N={N}: n={config.n}, B2={config.b2}, c={config.c}, δ={config.delta}, "
        f"N_sh={config.shots_per_circuit}, sampler={sampler.name}, seed={config.seed}"
    )
    with LogContext(logger, f"分解 {N}"):
        for circuit_index in range(1, config.max_circuits + 1):
            sigma = Permutation.random(config.n, rng)
            run.run_circuit(circuit_index, sigma, sampler, rng)
            if run.result is not None:
                break
            if run.relations.is_complete and circuit_index == config.max_circuits:
                logger.warning(
                    f"⚠️ 已收集 {len(run.relations)} 个 sr-pair 但平方同余均平凡"
                )

    if run.result is not None:
        logger.info(
            f"✅ 分解成功: {run.result}（{run.record.n_circuits} 条线路, "
            f"{len(run.record.steps)} 次测量, {len(run.relations)} 个 sr-pair）"
        )
    else:
        logger.warning(
            f"❌ {config.max_circuits} 条线路内未能分解 {N}（收集 {len(run.relations)} 个 sr-pair）"
        )
    _save_record(config, run.record)
    return run.result, run.record


def _save_record(config: RunConfig, record: RunRecord) -> None:
    from schnorr_qaoa.services.run_storage import RunRecordStorage

    if config.record_path:
        RunRecordStorage(config.record_path).save(record, config)


def build_training_set(
    N: int,
    n: int,
    size: int,
    c: float | None = None,
    delta: float | None = None,
    seed: int | None = None,
) -> list[QuboProblem]:
    """
    由随机置换生成训练用 QUBO（跳过退化实例）

    Args:
        N: 被分解的整数
        n: 比特数
        size: QUBO 个数
        c: 取整参数，默认取环境配置
        delta: LLL 参数，默认取环境配置
        seed: 随机种子

    Returns:
        list[QuboProblem]: 训练集
    """
    if size < 1:
        raise InvalidInputError(f"训练集大小必须 ≥ 1，收到 {size}")
    overrides: dict = {"N": N, "n": n, "b2": n}
    if c is not None:
        overrides["c"] = c
    if delta is not None:
        overrides["delta"] = delta
    if seed is not None:
        overrides["seed"] = seed
    config = RunConfig(**overrides)
    rng = np.random.default_rng(config.seed)

    qubos: list[QuboProblem] = []
    attempts = 0
    while len(qubos) < size:
        attempts += 1
        if attempts > 50 * size:
            raise InvalidInputError(f"尝试 {attempts} 个置换后仍不足 {size} 个非退化 QUBO")
        instance = prepare_instance(config, Permutation.random(n, rng))
        if instance.qubo is not None:
            qubos.append(instance.qubo)
    logger.info(f"✅ 训练集: N={N}, n={n}, {len(qubos)} 个 QUBO（尝试 {attempts} 个置换）")
    return qubos
