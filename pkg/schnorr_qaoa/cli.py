"""
命令行入口

子命令：
    factor           分解一个整数
    bench            比较采样器的 sr-pair 收集速率，输出 CSV
    train            在随机生成的 QUBO 训练集上训练固定角度
    export-circuits  将运行记录中的线路导出为交换文本
    replay           回放记录的测量轨迹

退出码：0 成功；2 用法/参数错误；3 预算内未能分解；4 输入文件错误。
"""

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from schnorr_qaoa.config import AppConfig
from schnorr_qaoa.errors import FactoringError, InvalidInputError, LineNumberedInputError
from schnorr_qaoa.lattice.prime_lattice import Permutation
from schnorr_qaoa.logging_config import setup_logging
from schnorr_qaoa.pipeline.benchmark import benchmark_collection_rate
from schnorr_qaoa.pipeline.factoring import build_training_set, factor, prepare_instance
from schnorr_qaoa.pipeline.replay import replay_file
from schnorr_qaoa.pipeline.run_config import RunConfig
from schnorr_qaoa.qaoa.interchange import export_circuit_text
from schnorr_qaoa.qaoa.training import FixedAngleTrainer, SearchConfig
from schnorr_qaoa.services.run_storage import RunRecordStorage

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NOT_FACTORED = 3
EXIT_INPUT_FILE = 4

# RunConfig 字段 → 命令行参数
FLAG_OF_FIELD = {
    "N": "--N",
    "n": "--n",
    "b2": "--b2",
    "c": "--c",
    "delta": "--delta",
    "shots_per_circuit": "--shots",
    "gamma": "--gamma",
    "beta": "--beta",
    "rz_sign": "--rz-sign",
    "mixer_sign": "--mixer-sign",
    "babai_variant": "--babai-variant",
    "sampler": "--sampler",
    "seed": "--seed",
    "max_circuits": "--max-circuits",
    "readout_complement": "--readout-complement",
    "record_path": "--record",
    "trace_path": "--trace",
}


def _run_flags() -> argparse.ArgumentParser:
    """各子命令共用的运行参数（缺省值由 RunConfig 给出）"""
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("运行参数")
    group.add_argument("--N", type=int, help="被分解的整数（默认 1591）")
    group.add_argument("--n", type=int, help="量子比特数 = 主因子基大小（默认 6）")
    group.add_argument("--b2", type=int, help="扩展因子基大小（默认 11）")
    group.add_argument("--c", type=float, help="取整参数 c（默认 1.5，LATTICE_C）")
    group.add_argument("--delta", type=float, help="LLL 参数 δ（默认 0.75，LATTICE_DELTA）")
    group.add_argument("--shots", type=int, dest="shots_per_circuit", help="每条线路的测量次数（默认 5）")
    group.add_argument("--gamma", type=float, help="问题角 γ（默认 2.41，QAOA_GAMMA；角度表复现用 8/3）")
    group.add_argument("--beta", type=float, help="混合角 β（默认 1.047，QAOA_BETA；角度表复现用 0.33）")
    group.add_argument("--rz-sign", type=int, choices=[1, -1], help="Rz 相位符号（默认 +1）")
    group.add_argument("--mixer-sign", type=int, choices=[1, -1], help="Rx 混合层符号（默认 +1）")
    group.add_argument(
        "--babai-variant", choices=["nearest_plane", "rounding"], help="Babai 变体（默认 nearest_plane）"
    )
    group.add_argument("--seed", type=int, help="随机种子（默认 7，APP_SEED）")
    group.add_argument("--max-circuits", type=int, help="线路数上限（默认 200·2^(n-6)，n ≤ 6 时 200）")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schnorr-qaoa",
        description="Schnorr 格 + 固定角度 QAOA 整数分解",
    )
    parser.add_argument("--log-level", default=None, help="日志级别（默认 APP_LOG_LEVEL）")
    parser.add_argument("--no-log-file", action="store_true", help="不写日志文件")
    sub = parser.add_subparsers(dest="command", required=True)
    run_flags = _run_flags()

    p = sub.add_parser("factor", parents=[run_flags], help="分解一个整数")
    p.add_argument("--sampler", choices=["emulator", "uniform"], help="采样器（默认 emulator）")
    p.add_argument("--record", dest="record_path", help="运行记录输出路径（JSONL）")

    p = sub.add_parser("bench", parents=[run_flags], help="sr-pair 收集速率基准")
    p.add_argument("--trials", type=int, default=30, help="每个采样器的试验次数（默认 30）")
    p.add_argument("--samplers", default="emulator,uniform", help="逗号分隔的采样器列表")
    p.add_argument("--out", default="bench.csv", help="CSV 输出路径（默认 bench.csv）")
    p.add_argument("--workers", type=int, default=None, help="并行进程数（默认 APP_WORKERS）")

    p = sub.add_parser("train", help="训练固定角度")
    p.add_argument("--train-N", type=int, default=1591, help="生成训练集所用的整数（默认 1591）")
    p.add_argument("--train-size", type=int, default=10, help="训练集 QUBO 个数（默认 10）")
    p.add_argument("--n", type=int, default=6, help="量子比特数（默认 6）")
    p.add_argument("--seed", type=int, default=None, help="随机种子（默认 APP_SEED）")
    p.add_argument("--restarts", type=int, default=5, help="进化策略重启次数（默认 5）")

    p = sub.add_parser("export-circuits", parents=[run_flags], help="导出运行记录中的线路")
    p.add_argument("--record", dest="record_path", required=True, help="运行记录（JSONL）")
    p.add_argument("--out-dir", required=True, help="输出目录")

    p = sub.add_parser("replay", parents=[run_flags], help="回放测量轨迹")
    p.add_argument("--trace", dest="trace_path", required=True, help="轨迹文件（JSONL）")
    p.add_argument("--use-recorded-pairs", action="store_true", help="采用轨迹中记录的 sr_pair 列")
    p.add_argument("--readout-complement", action="store_true", help="测量结果按位取反")
    p.add_argument("--record", dest="record_path", help="回放记录输出路径（JSONL）")
    return parser


def _config_from_args(args: argparse.Namespace, base: dict[str, Any] | None = None) -> RunConfig:
    values: dict[str, Any] = dict(base or {})
    for field in FLAG_OF_FIELD:
        value = getattr(args, field, None)
        if value is not None and value is not False:
            values[field] = value
    return RunConfig(**values)


def _cmd_factor(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    result, record = factor(config)
    if result is None:
        print(f"❌ {config.max_circuits} 条线路内未能分解 {config.N}（{record.n_pairs} 个 sr-pair）")
        return EXIT_NOT_FACTORED
    print(result)
    if record.steps:
        print(f"   线路 {record.n_circuits} 条，测量 {len(record.steps)} 次，sr-pair {record.n_pairs} 个")
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    samplers = [s.strip() for s in args.samplers.split(",") if s.strip()]
    for name in samplers:
        if name not in ("emulator", "uniform"):
            raise InvalidInputError(f"--samplers: 未知的采样器 {name!r}")
    curves = benchmark_collection_rate(config, samplers, args.trials, args.out, args.workers)
    for curve in curves:
        mean = curve.mean_shots_to_threshold
        stderr = curve.stderr_shots_to_threshold
        shots = "-" if mean is None else f"{mean:.1f}" + ("" if stderr is None else f" ± {stderr:.1f}")
        print(
            f"{curve.sampler:>9}: 最终平均 {curve.mean_pairs[-1]:.2f} 个 sr-pair, "
            f"达到 {curve.threshold} 个所需测量数 {shots}（{curve.completion_rate:.0%} 试验达到）"
        )
    print(f"CSV: {args.out}")
    return EXIT_OK


def _cmd_train(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else AppConfig.seed
    training_set = build_training_set(args.train_N, args.n, args.train_size, seed=seed)
    report = FixedAngleTrainer(SearchConfig(seed=seed, restarts=args.restarts)).train(training_set)
    print(f"gamma = {report.angles.gamma:.6f}")
    print(f"beta  = {report.angles.beta:.6f}")
    print(f"min P_q/P_c = {report.best_score:.4f}（起点 {report.initial_score:.4f}，评估 {report.evaluations} 次）")
    return EXIT_OK


def _cmd_export(args: argparse.Namespace) -> int:
    storage = RunRecordStorage(args.record_path)
    metadata = storage.load_metadata()
    base = (metadata or {}).get("config") or {}
    base = {k: v for k, v in base.items() if k not in ("record_path", "trace_path")}
    config = _config_from_args(args, base)
    steps = storage.load_steps()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    seen: set[int] = set()
    written = 0
    for step in steps:
        if step.circuit in seen:
            continue
        seen.add(step.circuit)
        instance = prepare_instance(config, Permutation(tuple(step.permutation)))
        if instance.circuit is None:
            logger.warning(f"⚠️ 线路 {step.circuit} 的实例退化，没有可导出的线路")
            continue
        path = out_dir / f"circuit_{step.circuit:03d}.txt"
        path.write_text(export_circuit_text(instance.circuit), encoding="utf-8")
        written += 1
        print(f"✅ 线路 {step.circuit}: {path}")
    print(f"共导出 {written} 条线路")
    return EXIT_OK


def _cmd_replay(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    record = replay_file(args.trace_path, config, use_recorded_pairs=args.use_recorded_pairs)
    if config.record_path:
        RunRecordStorage(config.record_path).save(record, config)
    print(f"{len(record.steps)} 步，{len(record.pairs)} 个 sr-pair")
    for step in record.steps:
        if step.sr_pair is not None:
            print(f"   步骤 {step.step:>3}: ({step.sr_pair[0]}, {step.sr_pair[1]})  #sr-pairs={step.n_pairs}")
    if record.result is None:
        print(f"❌ 未能分解 {config.N}")
        return EXIT_NOT_FACTORED
    print(f"✅ 第 {record.first_factored_step} 步完成分解: {record.result}")
    return EXIT_OK


COMMANDS = {
    "factor": _cmd_factor,
    "bench": _cmd_bench,
    "train": _cmd_train,
    "export-circuits": _cmd_export,
    "replay": _cmd_replay,
}


def _describe_validation_error(e: ValidationError) -> str:
    first = e.errors()[0]
    field = str(first["loc"][0]) if first["loc"] else ""
    flag = FLAG_OF_FIELD.get(field, field)
    return f"{flag}: {first['msg']}"


def run(argv: Sequence[str] | None = None) -> int:
    """
    解析参数并执行子命令

    Args:
        argv: 参数列表（不含程序名），默认取 sys.argv[1:]

    Returns:
        int: 退出码
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE

    setup_logging(
        log_level=args.log_level,
        log_to_file=False if args.no_log_file else None,
    )

    try:
        return COMMANDS[args.command](args)
    except ValidationError as e:
        print(f"参数错误 {_describe_validation_error(e)}", file=sys.stderr)
        return EXIT_USAGE
    except (FileNotFoundError, LineNumberedInputError) as e:
        print(f"输入文件错误: {e}", file=sys.stderr)
        return EXIT_INPUT_FILE
    except InvalidInputError as e:
        print(f"参数错误: {e}", file=sys.stderr)
        return EXIT_USAGE
    except FactoringError as e:
        logger.error(f"❌ {e}", exc_info=True)
        print(f"运行失败: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
