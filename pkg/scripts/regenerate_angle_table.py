#!/usr/bin/env python3
"""
由轨迹中的置换重新生成各线路的 θ_i / χ_ij 角度表

用法:
    python scripts/regenerate_angle_table.py [traces/n1591_run.jsonl]
"""

import sys
from pathlib import Path

# 添加项目根目录到 Python 路径
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from schnorr_qaoa.lattice import Permutation  # noqa: E402
from schnorr_qaoa.pipeline import RunConfig, prepare_instance  # noqa: E402
from schnorr_qaoa.trace_loader import TraceLoader  # noqa: E402


def main():
    trace_path = sys.argv[1] if len(sys.argv) > 1 else str(project_root / "traces" / "n1591_run.jsonl")
    config = RunConfig(N=1591, n=6, b2=11, c=1.5, delta=0.75, gamma=8 / 3, beta=0.33)

    circuits: dict[int, tuple[int, ...]] = {}
    for step in TraceLoader.load_trace(trace_path, n=config.n):
        circuits.setdefault(step.circuit, tuple(step.permutation))

    tables = {}
    for index, sigma in sorted(circuits.items()):
        instance = prepare_instance(config, Permutation(sigma))
        tables[index] = instance.circuit.angle_table() if instance.circuit else {}

    n = config.n
    keys = [f"theta_{i}" for i in range(1, n + 1)]
    keys += [f"chi_{i}{j}" for i in range(1, n + 1) for j in range(i + 1, n + 1)]

    print(f"{'':>9}" + "".join(f"{'Circuit' + str(k):>10}" for k in tables))
    for key in keys:
        print(f"{key:>9}" + "".join(f"{tables[k].get(key, 0.0):>10.3f}" for k in tables))


if __name__ == "__main__":
    main()
