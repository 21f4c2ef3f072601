#!/usr/bin/env python3
"""
sr-pair 收集速率基准

预设三组配置：
    n6   N = 1591,      n = 6,  B2 = 11,  c = 1.5, N_sh = 5,    30 次试验
    n10  N = 74425657,  n = 10, B2 = 50,  c = 4,   N_sh = 20,   10 次试验（默认预算 3200 条线路）
    n15  N = 35183361263263, n = 15, B2 = 450, c = 4, N_sh = 1000, 3 次试验（耗时很长）

用法:
    python scripts/run_collection_benchmark.py n6 --out results/n6.csv
"""

import argparse
import sys
from pathlib import Path

# 添加项目根目录到 Python 路径
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from schnorr_qaoa.logging_config import setup_logging  # noqa: E402
from schnorr_qaoa.pipeline import RunConfig, benchmark_collection_rate, separated_by_stderr  # noqa: E402

PRESETS = {
    "n6": {"config": {"N": 1591, "n": 6, "b2": 11, "c": 1.5, "shots_per_circuit": 5, "max_circuits": 60}, "trials": 30},
    # 未给 max_circuits 时按 n 取默认预算（n = 10 为 3200 条线路）
    "n10": {
        "config": {"N": 74425657, "n": 10, "b2": 50, "c": 4.0, "shots_per_circuit": 20},
        "trials": 10,
    },
    # N = 4194191 × 8388593；态矢量 2^15 维、N_sh = 1000，单次试验耗时很长
    "n15": {
        "config": {"N": 35183361263263, "n": 15, "b2": 450, "c": 4.0, "shots_per_circuit": 1000, "max_circuits": 400},
        "trials": 3,
    },
}


def main():
    parser = argparse.ArgumentParser(description="sr-pair 收集速率基准")
    parser.add_argument("preset", choices=sorted(PRESETS))
    parser.add_argument("--N", type=int, default=None, help="覆盖预设的 N")
    parser.add_argument("--trials", type=int, default=None)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--out", default=None, help="CSV 输出路径")
    args = parser.parse_args()

    setup_logging(log_to_file=False)
    preset = PRESETS[args.preset]
    overrides = dict(preset["config"], seed=args.seed)
    if args.N is not None:
        overrides["N"] = args.N

    config = RunConfig(**overrides)
    trials = args.trials or preset["trials"]
    out = args.out or f"bench_{args.preset}.csv"

    print("=" * 60)
    print(f"📊 收集速率基准: {args.preset} (N={config.N}, n={config.n}, B2={config.b2}, trials={trials})")
    print("=" * 60)

    emulator, uniform = benchmark_collection_rate(config, ["emulator", "uniform"], trials, out, args.workers)
    for curve in (emulator, uniform):
        print(
            f"{curve.sampler:>9}: 达到 {curve.threshold} 个 sr-pair 的平均测量数 "
            f"{curve.mean_shots_to_threshold} ± {curve.stderr_shots_to_threshold} "
            f"（{curve.completion_rate:.0%} 试验达到）"
        )
    verdict = "✅ 模拟器显著更快" if separated_by_stderr(emulator, uniform) else "⚠️ 两者无显著差异"
    print(verdict)
    print(f"CSV: {out}")


if __name__ == "__main__":
    main()
