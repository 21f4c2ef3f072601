"""
线路交换文本格式

语法（每行一条，角度为弧度，比特编号从 1 开始）：

    # schnorr-qaoa circuit v1
    qubits <n>
    Ry|Rx|Rz <q> <angle>
    ZZ|XX <q1> <q2> <angle>
    measure

`measure` 行仅在线路测量全部比特时出现。角度以 Python 最短往返 repr 输出，
因此 export → parse → export 逐字节一致。
"""

import logging

from schnorr_qaoa.errors import MalformedCircuitError
from schnorr_qaoa.qaoa.circuit import SINGLE_QUBIT_GATES, TWO_QUBIT_GATES, CircuitIR, Gate

logger = logging.getLogger(__name__)

HEADER = "# schnorr-qaoa circuit v1"


def export_circuit_text(circuit: CircuitIR) -> str:
    """
    导出线路为交换文本

    Args:
        circuit: 线路

    Returns:
        str: 以换行结尾的文本
    """
    lines = [HEADER, f"qubits {circuit.n}"]
    for gate in circuit.gates:
        qubits = " ".join(str(q) for q in gate.qubits)
        lines.append(f"{gate.name} {qubits} {float(gate.angle)!r}")
    if circuit.measure:
        lines.append("measure")
    return "\n".join(lines) + "\n"


def parse_circuit_text(text: str) -> CircuitIR:
    """
    解析交换文本

    Args:
        text: export_circuit_text 的输出

    Returns:
        CircuitIR: 线路

    Raises:
        MalformedCircuitError: 文本不符合语法（附带行号）
    """
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise MalformedCircuitError(f"缺少文件头 {HEADER!r}", line_number=1)
    if len(lines) < 2:
        raise MalformedCircuitError("缺少 qubits 行", line_number=2)

    parts = lines[1].split()
    if len(parts) != 2 or parts[0] != "qubits" or not parts[1].isdigit():
        raise MalformedCircuitError(f"无法解析 qubits 行: {lines[1]!r}", line_number=2)
    n = int(parts[1])

    gates: list[Gate] = []
    measure = False
    for line_number, raw in enumerate(lines[2:], start=3):
        line = raw.strip()
        if not line:
            continue
        if measure:
            raise MalformedCircuitError("measure 之后不能再有门", line_number=line_number)
        if line == "measure":
            measure = True
            continue

        name, *args = line.split()
        if name in SINGLE_QUBIT_GATES:
            arity = 1
        elif name in TWO_QUBIT_GATES:
            arity = 2
        else:
            raise MalformedCircuitError(f"未知的门: {name}", line_number=line_number)
        if len(args) != arity + 1:
            raise MalformedCircuitError(
                f"{name} 需要 {arity} 个比特和 1 个角度: {line!r}", line_number=line_number
            )
        try:
            qubits = tuple(int(a) for a in args[:arity])
            angle = float(args[arity])
            gates.append(Gate(name, qubits, angle))  # type: ignore[arg-type]
        except ValueError as e:
            raise MalformedCircuitError(str(e), line_number=line_number) from e

    try:
        return CircuitIR(n=n, gates=tuple(gates), measure=measure)
    except ValueError as e:
        raise MalformedCircuitError(str(e)) from e
