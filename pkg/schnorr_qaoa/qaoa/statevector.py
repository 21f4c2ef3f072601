"""
无噪声态矢量模拟器

态矢量按 [2]*n 形状存储，第 q 个比特对应第 q-1 个轴（第 1 个比特为最高位）。
对角门（Rz、ZZ）以相位乘法作用，XX 门按 cos χ·ψ - i sin χ·X⊗X ψ 作用。
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from schnorr_qaoa.config import QaoaConfig
from schnorr_qaoa.errors import InvalidInputError, ResourceLimitError
from schnorr_qaoa.qaoa.circuit import CircuitIR, Gate
from schnorr_qaoa.utils.bitstrings import index_to_bitstring

logger = logging.getLogger(__name__)

Seed = int | np.random.Generator | np.random.SeedSequence | None

NORMALIZATION_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Distribution:
    """
    测量结果分布

    Attributes:
        n: 比特数
        probabilities: 长度 2^n 的概率向量，下标的二进制表示即比特串
    """

    n: int
    probabilities: np.ndarray

    def __post_init__(self):
        probs = np.asarray(self.probabilities, dtype=float)
        if probs.shape != (2**self.n,):
            raise InvalidInputError(f"概率向量长度应为 {2**self.n}，收到 {probs.shape}")
        if np.any(probs < -NORMALIZATION_TOLERANCE):
            raise InvalidInputError("概率不能为负")
        if abs(probs.sum() - 1.0) > NORMALIZATION_TOLERANCE:
            raise InvalidInputError(f"概率和为 {probs.sum():.12f}，未归一化")
        probs = np.clip(probs, 0.0, None)
        probs.setflags(write=False)
        object.__setattr__(self, "probabilities", probs)

    @classmethod
    def uniform(cls, n: int) -> "Distribution":
        return cls(n=n, probabilities=np.full(2**n, 1.0 / 2**n))

    def probability(self, bitstring: str) -> float:
        return float(self.probabilities[int(bitstring, 2)])

    def most_likely(self, k: int = 1) -> list[tuple[str, float]]:
        """概率最高的 k 个比特串"""
        order = np.argsort(-self.probabilities, kind="stable")[:k]
        return [(index_to_bitstring(int(i), self.n), float(self.probabilities[i])) for i in order]


def _r_phi(theta: float, phi: float) -> np.ndarray:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array(
        [[c, -1j * s * np.exp(-1j * phi)], [-1j * s * np.exp(1j * phi), c]], dtype=complex
    )


def _slice(n: int, axis: int, value: int) -> tuple:
    index: list = [slice(None)] * n
    index[axis] = value
    return tuple(index)


def _apply_single(psi: np.ndarray, matrix: np.ndarray, axis: int) -> np.ndarray:
    moved = np.moveaxis(psi, axis, 0)
    moved = np.tensordot(matrix, moved, axes=([1], [0]))
    return np.moveaxis(moved, 0, axis)


def _apply_gate(psi: np.ndarray, gate: Gate, n: int) -> np.ndarray:
    if gate.name == "Ry":
        return _apply_single(psi, _r_phi(gate.angle, math.pi / 2), gate.qubits[0] - 1)
    if gate.name == "Rx":
        return _apply_single(psi, _r_phi(gate.angle, 0.0), gate.qubits[0] - 1)
    if gate.name == "Rz":
        psi[_slice(n, gate.qubits[0] - 1, 1)] *= np.exp(1j * gate.angle)
        return psi
    if gate.name == "ZZ":
        a, b = gate.qubits[0] - 1, gate.qubits[1] - 1
        same, diff = np.exp(-1j * gate.angle), np.exp(1j * gate.angle)
        for va in (0, 1):
            for vb in (0, 1):
                index: list = [slice(None)] * n
                index[a], index[b] = va, vb
                psi[tuple(index)] *= same if va == vb else diff
        return psi
    if gate.name == "XX":
        a, b = gate.qubits[0] - 1, gate.qubits[1] - 1
        flipped = np.flip(np.flip(psi, axis=a), axis=b)
        return math.cos(gate.angle) * psi - 1j * math.sin(gate.angle) * flipped
    raise InvalidInputError(f"未知的门: {gate.name}")


def evolve(circuit: CircuitIR, state: np.ndarray | None = None) -> np.ndarray:
    """
    按门顺序演化态矢量

    Args:
        circuit: 线路
        state: 初态（长度 2^n），默认 |0…0⟩

    Returns:
        np.ndarray: 末态振幅
    """
    n = circuit.n
    dim = 2**n
    if state is None:
        psi = np.zeros(dim, dtype=complex)
        psi[0] = 1.0
    else:
        psi = np.array(state, dtype=complex)
        if psi.shape != (dim,):
            raise InvalidInputError(f"初态长度应为 {dim}，收到 {psi.shape}")
    if n == 0:
        return psi
    psi = psi.reshape([2] * n)
    for gate in circuit.gates:
        psi = _apply_gate(psi, gate, n)
    return psi.reshape(dim)


def simulate_statevector(circuit: CircuitIR, max_qubits: int | None = None) -> Distribution:
    """
    精确计算线路作用于 |0…0⟩ 后的测量分布

    Args:
        circuit: 线路
        max_qubits: 比特数上限，默认取 QAOA_MAX_QUBITS

    Returns:
        Distribution: 输出分布

    Raises:
        ResourceLimitError: 比特数超过上限
    """
    limit = QaoaConfig.max_qubits if max_qubits is None else max_qubits
    if circuit.n > limit:
        raise ResourceLimitError(f"态矢量模拟最多支持 {limit} 个比特，收到 {circuit.n}")
    amplitudes = evolve(circuit)
    probs = np.abs(amplitudes) ** 2
    return Distribution(n=circuit.n, probabilities=probs / probs.sum())


def sample(dist: Distribution, shots: int, seed: Seed = None) -> list[str]:
    """
    从分布中独立采样比特串

    Args:
        dist: 分布
        shots: 采样次数（≥ 1）
        seed: 整数种子或 numpy Generator

    Returns:
        list[str]: 比特串列表
    """
    if shots < 1:
        raise InvalidInputError(f"shots 必须 ≥ 1，收到 {shots}")
    rng = np.random.default_rng(seed)
    p = dist.probabilities / dist.probabilities.sum()
    draws = rng.choice(len(p), size=shots, p=p)
    return [index_to_bitstring(int(k), dist.n) for k in draws]


def sample_uniform(n: int, shots: int, seed: Seed = None) -> list[str]:
    """均匀随机采样 n 比特串"""
    if shots < 1:
        raise InvalidInputError(f"shots 必须 ≥ 1，收到 {shots}")
    rng = np.random.default_rng(seed)
    draws = rng.integers(0, 2**n, size=shots)
    return [index_to_bitstring(int(k), n) for k in draws]
