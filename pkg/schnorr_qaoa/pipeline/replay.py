"""
轨迹回放

按记录的置换与测量结果确定性地重新推导 sr-pair 与分解标志，
用于核对经典后处理。
"""

import logging
from collections.abc import Sequence
from pathlib import Path

from schnorr_qaoa.errors import MalformedTraceError
from schnorr_qaoa.lattice.prime_lattice import Permutation
from schnorr_qaoa.logging_config import LogContext
from schnorr_qaoa.pipeline.factoring import FactoringRun
from schnorr_qaoa.pipeline.records import RunRecord, TraceStep
from schnorr_qaoa.pipeline.run_config import RunConfig
from schnorr_qaoa.relations.sr_pairs import SrPair, verify_sr_pair
from schnorr_qaoa.utils.bitstrings import complement_bitstring

logger = logging.getLogger(__name__)


def _recorded_pair(run: FactoringRun, entry: TraceStep) -> SrPair | None:
    if entry.sr_pair is None:
        return None
    u, v = entry.sr_pair
    pair = verify_sr_pair(u, v, run.config.N, run.b2, run.b1)
    if pair is None:
        logger.warning(f"⚠️ 记录的 sr-pair ({u}, {v}) 未通过校验，忽略")
    return pair


def replay(
    trace: Sequence[TraceStep], config: RunConfig, use_recorded_pairs: bool = False
) -> RunRecord:
    """
    回放轨迹

    Args:
        trace: 记录的步骤（置换、线路编号、测量结果）
        config: 运行配置（N、n、B2、c、δ 与读出约定）
        use_recorded_pairs: 直接采用记录中的 sr_pair 列（逐个重新校验），
            不再由格与比特串推导

    Returns:
        RunRecord: 重新推导的运行记录

    Raises:
        MalformedTraceError: 置换长度与 n 不一致
    """
    run = FactoringRun(config, verbose=False)
    with LogContext(logger, f"回放 {len(trace)} 步轨迹 (N={config.N})"):
        for index, entry in enumerate(trace, start=1):
            if len(entry.permutation) != config.n:
                raise MalformedTraceError(
                    f"第 {index} 步置换长度 {len(entry.permutation)} 与 n={config.n} 不一致"
                )
            sigma = Permutation(tuple(entry.permutation))
            if use_recorded_pairs:
                pair = _recorded_pair(run, entry)
            else:
                bitstring = entry.bitstring
                if config.readout_complement:
                    bitstring = complement_bitstring(bitstring)
                pair = run.candidate_pair(run.instance(sigma), bitstring)
            run.record_step(sigma, entry.circuit, entry.bitstring, pair)

    record = run.record
    if record.result is not None:
        logger.info(
            f"✅ 回放完成: {len(record.pairs)} 个 sr-pair，第 {record.first_factored_step} 步分解 "
            f"{record.result}"
        )
    else:
        logger.info(f"回放完成: {len(record.pairs)} 个 sr-pair，未分解")
    return record


def replay_file(path: str | Path, config: RunConfig, use_recorded_pairs: bool = False) -> RunRecord:
    """从 JSONL 文件加载轨迹并回放"""
    from schnorr_qaoa.trace_loader import TraceLoader

    trace = TraceLoader.load_trace(path, n=config.n)
    return replay(trace, config, use_recorded_pairs=use_recorded_pairs)
