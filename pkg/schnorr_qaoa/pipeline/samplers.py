"""
采样器

emulator：态矢量模拟后按分布采样；uniform：均匀随机比特串。
"""

import logging
from collections import OrderedDict
from typing import Protocol

import numpy as np

from schnorr_qaoa.config import AppConfig
from schnorr_qaoa.errors import InvalidInputError
from schnorr_qaoa.qaoa.circuit import CircuitIR
from schnorr_qaoa.qaoa.statevector import Distribution, sample, sample_uniform, simulate_statevector

logger = logging.getLogger(__name__)


class Sampler(Protocol):
    name: str

    def draw(self, circuit: CircuitIR, shots: int, rng: np.random.Generator) -> list[str]: ...


class EmulatorSampler:
    """无噪声模拟器采样，按线路做 LRU 缓存"""

    name = "emulator"

    def __init__(self, max_qubits: int | None = None, cache_size: int | None = None):
        self.max_qubits = max_qubits
        self.cache_size = AppConfig.emulator_cache_size if cache_size is None else cache_size
        if self.cache_size < 1:
            raise InvalidInputError(f"cache_size 必须 ≥ 1，收到 {self.cache_size}")
        self._cache: OrderedDict[CircuitIR, Distribution] = OrderedDict()

    def distribution(self, circuit: CircuitIR) -> Distribution:
        if circuit in self._cache:
            self._cache.move_to_end(circuit)
            return self._cache[circuit]
        dist = simulate_statevector(circuit, max_qubits=self.max_qubits)
        self._cache[circuit] = dist
        if len(self._cache) > self.cache_size:
            self._cache.popitem(last=False)
        return dist

    def draw(self, circuit: CircuitIR, shots: int, rng: np.random.Generator) -> list[str]:
        return sample(self.distribution(circuit), shots, rng)


class UniformSampler:
    """均匀随机采样"""

    name = "uniform"

    def draw(self, circuit: CircuitIR, shots: int, rng: np.random.Generator) -> list[str]:
        return sample_uniform(circuit.n, shots, rng)


def make_sampler(name: str) -> Sampler:
    """按名称创建采样器（replay 不经过采样器）"""
    if name == "emulator":
        return EmulatorSampler()
    if name == "uniform":
        return UniformSampler()
    raise InvalidInputError(f"未知的采样器: {name}（可选 emulator / uniform）")
