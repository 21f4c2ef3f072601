"""
QAOA 模块

QUBO → 线路编译、原生门转译、态矢量模拟、采样与固定角度训练。
"""

from schnorr_qaoa.qaoa.circuit import (
    CircuitIR,
    Gate,
    QaoaAngles,
    qubo_to_circuit,
    transpile_native,
    unitary_of,
)
from schnorr_qaoa.qaoa.interchange import export_circuit_text, parse_circuit_text
from schnorr_qaoa.qaoa.statevector import (
    Distribution,
    evolve,
    sample,
    sample_uniform,
    simulate_statevector,
)
from schnorr_qaoa.qaoa.training import (
    FixedAngleTrainer,
    SearchConfig,
    TrainingMetric,
    TrainingReport,
    qubo_energies,
    train_fixed_angles,
    training_metric,
)

__all__ = [
    "CircuitIR",
    "Distribution",
    "FixedAngleTrainer",
    "Gate",
    "QaoaAngles",
    "SearchConfig",
    "TrainingMetric",
    "TrainingReport",
    "evolve",
    "export_circuit_text",
    "parse_circuit_text",
    "qubo_energies",
    "qubo_to_circuit",
    "sample",
    "sample_uniform",
    "simulate_statevector",
    "train_fixed_angles",
    "training_metric",
    "transpile_native",
    "unitary_of",
]
