"""
pytest 公共 fixture

N = 1591、n = 6 的参考实例，以及随仓库附带的参考运行轨迹。
"""

import logging
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from schnorr_qaoa.lattice import Permutation, build_prime_lattice, lll_reduce
from schnorr_qaoa.numtheory import first_primes

PROJECT_ROOT = Path(__file__).parent.parent

# 参考运行中收集到的 12 个 sr-pair（按收集顺序）
REFERENCE_PAIRS = [
    (1521, 1),
    (1690, 1),
    (5005, 3),
    (1625, 1),
    (1540, 1),
    (41503, 25),
    (5775, 4),
    (1375, 1),
    (1573, 1),
    (3185, 2),
    (3125, 2),
    (1617, 1),
]

# 参考置换 (1, 3, 2, 5, 6, 4) 的归一化 QUBO 系数（保留 3 位小数）
REFERENCE_QUBO = np.array(
    [
        [-0.929, -0.286, 0.143, 0.071, 0.143, 0.286],
        [0.0, 1.000, -0.286, 0.143, -0.286, -0.571],
        [0.0, 0.0, -1.643, -0.286, 0.643, 0.071],
        [0.0, 0.0, 0.0, -0.143, 0.0, -0.429],
        [0.0, 0.0, 0.0, 0.0, -2.571, 0.643],
        [0.0, 0.0, 0.0, 0.0, 0.0, -1.429],
    ]
)

# 参考运行 9 条线路的 ZZ 耦合角 χ_ij（按 (1,2), (1,3), …, (5,6) 排列，保留 3 位小数）
REFERENCE_COUPLINGS = [
    [-0.095, 0.048, 0.024, 0.048, 0.095, -0.095, 0.048, -0.095, -0.190, -0.095, 0.214, 0.024, 0.0, -0.143, 0.214],
    [-0.190, 0.095, -0.048, -0.024, -0.095, -0.167, 0.190, 0.167, 0.190, -0.048, 0.071, 0.071, -0.119, 0.333, 0.119],
    [-0.026, 0.128, 0.128, 0.103, -0.128, -0.231, -0.205, 0.077, 0.077, 0.333, 0.179, -0.128, -0.128, -0.179, -0.128],
    [-0.095, 0.048, 0.024, 0.048, 0.095, -0.095, 0.048, -0.095, -0.190, -0.095, 0.214, 0.024, 0.0, -0.143, 0.214],
    [0.300, -0.233, -0.200, -0.067, 0.067, 0.100, -0.233, -0.200, -0.200, -0.033, -0.167, -0.200, -0.167, -0.100, 0.0],
    [0.333, 0.333, 0.0, 0.278, -0.389, -0.167, 0.056, 0.056, -0.389, -0.333, -0.278, 0.222, 0.0, -0.389, -0.444],
    [-0.233, -0.133, -0.033, 0.0, -0.133, 0.200, 0.067, 0.167, 0.0, -0.167, -0.133, 0.133, 0.333, -0.233, -0.100],
    [0.233, 0.067, 0.033, 0.167, -0.133, 0.200, 0.233, 0.167, 0.167, -0.167, -0.133, 0.133, 0.333, -0.067, -0.267],
    [-0.286, -0.190, -0.238, -0.238, 0.238, 0.333, -0.286, 0.048, 0.048, -0.095, -0.190, 0.143, -0.286, -0.048, -0.286],
]


@pytest.fixture
def b1():
    """主因子基：前 6 个素数"""
    return first_primes(6)


@pytest.fixture
def b2():
    """扩展因子基：前 11 个素数"""
    return first_primes(11)


@pytest.fixture
def reference_sigma():
    return Permutation((1, 3, 2, 5, 6, 4))


@pytest.fixture
def reference_lattice(b1, reference_sigma):
    return build_prime_lattice(1591, b1, Fraction(3, 2), reference_sigma)


@pytest.fixture
def reference_reduced(reference_lattice):
    return lll_reduce(reference_lattice.basis)


@pytest.fixture
def trace_path():
    """参考运行轨迹（43 步）"""
    return PROJECT_ROOT / "traces" / "n1591_run.jsonl"


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(autouse=True)
def _restore_root_logger():
    """命令行入口会重置根 logger 的 handlers，测试结束后还原"""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)
