"""
流水线模块

分解主流程、收集速率基准与轨迹回放。
"""

from schnorr_qaoa.pipeline.benchmark import (
    CollectionCurve,
    benchmark_collection_rate,
    collect_trajectory,
    separated_by_stderr,
    write_curves_csv,
)
from schnorr_qaoa.pipeline.factoring import (
    CvpInstance,
    FactoringRun,
    build_training_set,
    factor,
    prepare_instance,
    trivial_split,
)
from schnorr_qaoa.pipeline.records import RunRecord, StepRecord, TraceStep
from schnorr_qaoa.pipeline.replay import replay, replay_file
from schnorr_qaoa.pipeline.run_config import RunConfig
from schnorr_qaoa.pipeline.samplers import EmulatorSampler, UniformSampler, make_sampler

__all__ = [
    "CollectionCurve",
    "CvpInstance",
    "EmulatorSampler",
    "FactoringRun",
    "RunConfig",
    "RunRecord",
    "StepRecord",
    "TraceStep",
    "UniformSampler",
    "benchmark_collection_rate",
    "build_training_set",
    "collect_trajectory",
    "factor",
    "make_sampler",
    "prepare_instance",
    "replay",
    "replay_file",
    "separated_by_stderr",
    "trivial_split",
    "write_curves_csv",
]
