"""
固定角度单层 QAOA 线路

门语义（量子比特编号从 1 开始，第 1 个比特为最高位）：
    R_φ(θ) = exp(-i σ_φ θ/2)，σ_φ = cos φ σx + sin φ σy（Rx: φ=0，Ry: φ=π/2）
    Rz(θ)  = diag(1, e^{iθ})
    ZZ(χ)  = exp(-i χ σz⊗σz)
    XX(χ)  = exp(-i χ σx⊗σx)
"""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

import numpy as np

from schnorr_qaoa.config import QaoaConfig
from schnorr_qaoa.errors import InvalidInputError, ResourceLimitError

logger = logging.getLogger(__name__)

GateName = Literal["Ry", "Rx", "Rz", "ZZ", "XX"]

SINGLE_QUBIT_GATES = ("Ry", "Rx", "Rz")
TWO_QUBIT_GATES = ("ZZ", "XX")

# unitary_of 允许的最大比特数
MAX_UNITARY_QUBITS = 10


@dataclass(frozen=True)
class Gate:
    """
    单个门

    Attributes:
        name: 门名称 Ry/Rx/Rz/ZZ/XX
        qubits: 作用的比特（从 1 开始）
        angle: 角度（弧度）
    """

    name: GateName
    qubits: tuple[int, ...]
    angle: float

    def __post_init__(self):
        if self.name in SINGLE_QUBIT_GATES:
            arity = 1
        elif self.name in TWO_QUBIT_GATES:
            arity = 2
        else:
            raise InvalidInputError(f"未知的门: {self.name}")
        if len(self.qubits) != arity:
            raise InvalidInputError(f"{self.name} 需要 {arity} 个比特，收到 {self.qubits}")
        if arity == 2 and self.qubits[0] == self.qubits[1]:
            raise InvalidInputError(f"{self.name} 必须作用在两个不同的比特上: {self.qubits}")


@dataclass(frozen=True)
class CircuitIR:
    """
    门列表形式的线路

    Attributes:
        n: 比特数
        gates: 有序门列表
        measure: 末尾是否测量全部比特
    """

    n: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)
    measure: bool = True

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInputError(f"比特数不能为负: {self.n}")
        for gate in self.gates:
            if any(q < 1 or q > self.n for q in gate.qubits):
                raise InvalidInputError(f"门 {gate} 的比特超出 1..{self.n}")

    def count(self, name: str) -> int:
        return sum(1 for gate in self.gates if gate.name == name)

    def angle_table(self) -> dict[str, float]:
        """θ_i / χ_ij 角度表（仅 Rz 与 ZZ 门）"""
        table: dict[str, float] = {}
        for gate in self.gates:
            if gate.name == "Rz":
                table[f"theta_{gate.qubits[0]}"] = gate.angle
            elif gate.name == "ZZ":
                i, j = gate.qubits
                table[f"chi_{i}{j}"] = gate.angle
        return table


@dataclass(frozen=True)
class QaoaAngles:
    """
    QAOA 角度

    Attributes:
        gamma: 问题角 γ
        beta: 混合角 β（Rx 角度为 2β）
        layers: 层数，固定为 1
    """

    gamma: float
    beta: float
    layers: int = 1

    def __post_init__(self):
        if self.layers != 1:
            raise InvalidInputError(f"仅支持单层 QAOA，收到 layers={self.layers}")

    @classmethod
    def from_config(cls) -> "QaoaAngles":
        return cls(gamma=QaoaConfig.gamma, beta=QaoaConfig.beta)


def as_qubo_matrix(qnorm: Sequence[Sequence[float | Fraction]] | np.ndarray) -> np.ndarray:
    """转换为浮点矩阵并检查方阵、上三角"""
    matrix = np.array([[float(v) for v in row] for row in qnorm], dtype=float)
    if matrix.size == 0:
        return matrix.reshape(0, 0)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise InvalidInputError(f"QUBO 矩阵必须是方阵，收到形状 {matrix.shape}")
    if np.any(np.tril(matrix, k=-1) != 0):
        raise InvalidInputError("QUBO 矩阵必须是上三角矩阵")
    return matrix


def qubo_to_circuit(
    qnorm: Sequence[Sequence[float | Fraction]] | np.ndarray,
    angles: QaoaAngles,
    rz_sign: int | None = None,
    mixer_sign: int | None = None,
) -> CircuitIR:
    """
    将归一化 QUBO 编译为单层 QAOA 线路

    门顺序：全体 Ry(π/2) → ZZ(χ_ij)（i<j，χ=0 的跳过）→ Rz(θ_i) → 全体 Rx(±2β) → 测量。
    θ_i = rz_sign·(γ/4)·Q_ii，χ_ij = (γ/8)·Q_ij，Rx 角度 = mixer_sign·2β。

    Args:
        qnorm: n×n 上三角归一化 QUBO 矩阵
        angles: QAOA 角度
        rz_sign: Rz 相位符号，默认取 QAOA_RZ_SIGN
        mixer_sign: 混合层符号，默认取 QAOA_MIXER_SIGN

    Returns:
        CircuitIR: 线路
    """
    matrix = as_qubo_matrix(qnorm)
    sign = QaoaConfig.rz_sign if rz_sign is None else rz_sign
    if sign not in (1, -1):
        raise InvalidInputError(f"rz_sign 必须是 ±1，收到 {sign}")
    mixer = QaoaConfig.mixer_sign if mixer_sign is None else mixer_sign
    if mixer not in (1, -1):
        raise InvalidInputError(f"mixer_sign 必须是 ±1，收到 {mixer}")
    n = matrix.shape[0]

    gates = [Gate("Ry", (q,), math.pi / 2) for q in range(1, n + 1)]
    for i in range(n):
        for j in range(i + 1, n):
            chi = angles.gamma / 8 * matrix[i, j]
            if chi != 0:
                gates.append(Gate("ZZ", (i + 1, j + 1), float(chi)))
    for i in range(n):
        theta = sign * angles.gamma / 4 * matrix[i, i]
        if theta != 0:
            gates.append(Gate("Rz", (i + 1,), float(theta)))
    gates.extend(Gate("Rx", (q,), mixer * 2 * angles.beta) for q in range(1, n + 1))
    return CircuitIR(n=n, gates=tuple(gates), measure=True)


def transpile_native(circuit: CircuitIR) -> CircuitIR:
    """
    将 ZZ 门替换为原生门序列

    ZZ(χ) = (Ry(π/2)⊗Ry(π/2)) · XX(χ) · (Ry(-π/2)⊗Ry(-π/2))，
    按时间顺序即 Ry(-π/2), Ry(-π/2), XX(χ), Ry(π/2), Ry(π/2)。

    Args:
        circuit: 输入线路

    Returns:
        CircuitIR: 仅含 R_φ、Rz、XX 的等价线路
    """
    gates: list[Gate] = []
    for gate in circuit.gates:
        if gate.name != "ZZ":
            gates.append(gate)
            continue
        i, j = gate.qubits
        gates.extend(
            [
                Gate("Ry", (i,), -math.pi / 2),
                Gate("Ry", (j,), -math.pi / 2),
                Gate("XX", (i, j), gate.angle),
                Gate("Ry", (i,), math.pi / 2),
                Gate("Ry", (j,), math.pi / 2),
            ]
        )
    return CircuitIR(n=circuit.n, gates=tuple(gates), measure=circuit.measure)


def unitary_of(circuit: CircuitIR) -> np.ndarray:
    """
    线路的稠密酉矩阵（列 k 为基矢 |k⟩ 的演化结果）

    Raises:
        ResourceLimitError: n > MAX_UNITARY_QUBITS
    """
    from schnorr_qaoa.qaoa.statevector import evolve

    if circuit.n > MAX_UNITARY_QUBITS:
        raise ResourceLimitError(
            f"unitary_of 仅支持 n ≤ {MAX_UNITARY_QUBITS}，收到 n={circuit.n}"
        )
    dim = 2**circuit.n
    columns = []
    for k in range(dim):
        basis_state = np.zeros(dim, dtype=complex)
        basis_state[k] = 1.0
        columns.append(evolve(circuit, basis_state))
    return np.stack(columns, axis=1)
