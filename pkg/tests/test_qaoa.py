"""
QAOA 线路编译、态矢量模拟、采样与交换格式测试
"""

import dataclasses
import itertools
import math
from functools import reduce

import numpy as np
import pytest

from schnorr_qaoa.errors import InvalidInputError, MalformedCircuitError, ResourceLimitError
from schnorr_qaoa.lattice import babai_nearest_plane_ceil, build_qubo
from schnorr_qaoa.qaoa import (
    CircuitIR,
    Distribution,
    Gate,
    QaoaAngles,
    export_circuit_text,
    parse_circuit_text,
    qubo_to_circuit,
    sample,
    sample_uniform,
    simulate_statevector,
    transpile_native,
    unitary_of,
)
from tests.conftest import REFERENCE_QUBO

GAMMA = 8 / 3
BETA = 0.33

_I = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)


def _single(theta, phi):
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array(
        [[c, -1j * s * np.exp(-1j * phi)], [-1j * s * np.exp(1j * phi), c]], dtype=complex
    )


def _embed(n, factors):
    """第 1 个比特是 Kronecker 积最左边的因子"""
    return reduce(np.kron, [factors.get(q, _I) for q in range(1, n + 1)])


def _dense_gate(n, gate):
    if gate.name == "Ry":
        return _embed(n, {gate.qubits[0]: _single(gate.angle, math.pi / 2)})
    if gate.name == "Rx":
        return _embed(n, {gate.qubits[0]: _single(gate.angle, 0.0)})
    if gate.name == "Rz":
        return _embed(n, {gate.qubits[0]: np.diag([1, np.exp(1j * gate.angle)])})
    if gate.name == "ZZ":
        z = np.diag([1.0, -1.0])
        zz = _embed(n, {gate.qubits[0]: z, gate.qubits[1]: z})
        return np.diag(np.exp(-1j * gate.angle * np.diag(zz)))
    xx = _embed(n, {gate.qubits[0]: _X, gate.qubits[1]: _X})
    return math.cos(gate.angle) * np.eye(2**n) - 1j * math.sin(gate.angle) * xx


def _oracle_probabilities(circuit):
    psi = np.zeros(2**circuit.n, dtype=complex)
    psi[0] = 1.0
    for gate in circuit.gates:
        psi = _dense_gate(circuit.n, gate) @ psi
    return np.abs(psi) ** 2


def _random_upper(rng, n):
    return np.triu(rng.uniform(-1.0, 1.0, size=(n, n)))


class TestCircuitCompilation:
    def test_reference_angles(self):
        circuit = qubo_to_circuit(REFERENCE_QUBO, QaoaAngles(GAMMA, BETA), rz_sign=1)
        table = circuit.angle_table()
        assert table["theta_1"] == pytest.approx(-0.619, abs=1e-3)
        assert table["theta_2"] == pytest.approx(0.667, abs=1e-3)
        assert table["chi_12"] == pytest.approx(-0.095, abs=1e-3)
        assert table["chi_35"] == pytest.approx(0.214, abs=1e-3)

    def test_reference_angle_column(self):
        expected = {
            "theta_1": -0.619, "theta_2": 0.667, "theta_3": -1.095,
            "theta_4": -0.095, "theta_5": -1.714, "theta_6": -0.952,
            "chi_12": -0.095, "chi_13": 0.048, "chi_14": 0.024, "chi_15": 0.048,
            "chi_16": 0.095, "chi_23": -0.095, "chi_24": 0.048, "chi_25": -0.095,
            "chi_26": -0.190, "chi_34": -0.095, "chi_35": 0.214, "chi_36": 0.024,
            "chi_46": -0.143, "chi_56": 0.214,
        }  # fmt: skip
        table = qubo_to_circuit(REFERENCE_QUBO, QaoaAngles(GAMMA, BETA), rz_sign=1).angle_table()
        assert "chi_45" not in table
        assert set(table) == set(expected)
        for key, value in expected.items():
            assert table[key] == pytest.approx(value, abs=1e-2), key

    def test_gate_order(self):
        circuit = qubo_to_circuit(REFERENCE_QUBO, QaoaAngles(GAMMA, BETA), rz_sign=1)
        names = [g.name for g in circuit.gates]
        assert names[:6] == ["Ry"] * 6
        assert names[-6:] == ["Rx"] * 6
        assert max(i for i, name in enumerate(names) if name == "ZZ") < min(
            i for i, name in enumerate(names) if name == "Rz"
        )
        assert all(g.angle == pytest.approx(2 * BETA) for g in circuit.gates if g.name == "Rx")
        assert circuit.count("ZZ") == 14
        assert circuit.measure

    def test_zero_qubo(self):
        circuit = qubo_to_circuit(np.zeros((4, 4)), QaoaAngles(GAMMA, BETA))
        assert [g.name for g in circuit.gates] == ["Ry"] * 4 + ["Rx"] * 4

    def test_rz_sign_flips_theta(self):
        plus = qubo_to_circuit(REFERENCE_QUBO, QaoaAngles(GAMMA, BETA), rz_sign=1).angle_table()
        minus = qubo_to_circuit(REFERENCE_QUBO, QaoaAngles(GAMMA, BETA), rz_sign=-1).angle_table()
        assert minus["theta_3"] == pytest.approx(-plus["theta_3"])
        assert minus["chi_35"] == pytest.approx(plus["chi_35"])
        with pytest.raises(InvalidInputError):
            qubo_to_circuit(REFERENCE_QUBO, QaoaAngles(GAMMA, BETA), rz_sign=2)

    def test_mixer_sign_flips_rx(self):
        plus = qubo_to_circuit(REFERENCE_QUBO, QaoaAngles(GAMMA, BETA), mixer_sign=1)
        minus = qubo_to_circuit(REFERENCE_QUBO, QaoaAngles(GAMMA, BETA), mixer_sign=-1)
        negated = qubo_to_circuit(REFERENCE_QUBO, QaoaAngles(GAMMA, -BETA), mixer_sign=1)
        assert [g.angle for g in plus.gates if g.name == "Rx"] == [2 * BETA] * 6
        assert [g.angle for g in minus.gates if g.name == "Rx"] == [-2 * BETA] * 6
        assert minus == negated
        with pytest.raises(InvalidInputError):
            qubo_to_circuit(REFERENCE_QUBO, QaoaAngles(GAMMA, BETA), mixer_sign=0)

    def test_constant_shift_leaves_distribution(self, reference_lattice, reference_reduced):
        babai = babai_nearest_plane_ceil(reference_reduced, reference_lattice.target)
        qubo = build_qubo(babai, reference_reduced)
        shifted = dataclasses.replace(qubo, constant=qubo.constant + 1000)
        angles = QaoaAngles(GAMMA, BETA)
        first = simulate_statevector(qubo_to_circuit(qubo.normalized, angles))
        second = simulate_statevector(qubo_to_circuit(shifted.normalized, angles))
        assert np.array_equal(first.probabilities, second.probabilities)
        energies = [qubo.energy(x) for x in itertools.product((0, 1), repeat=6)]
        shifted_energies = [shifted.energy(x) + shifted.constant for x in itertools.product((0, 1), repeat=6)]
        assert np.argmin(energies) == np.argmin(shifted_energies)

    def test_rejects_lower_triangular(self):
        with pytest.raises(InvalidInputError):
            qubo_to_circuit(np.array([[0.0, 0.0], [1.0, 0.0]]), QaoaAngles(GAMMA, BETA))

    def test_gate_validation(self):
        with pytest.raises(InvalidInputError):
            Gate("ZZ", (1, 1), 0.1)
        with pytest.raises(InvalidInputError):
            Gate("Rx", (1, 2), 0.1)
        with pytest.raises(InvalidInputError):
            CircuitIR(n=2, gates=(Gate("Rx", (3,), 0.1),))
        with pytest.raises(InvalidInputError):
            QaoaAngles(GAMMA, BETA, layers=2)


class TestStatevector:
    @pytest.mark.parametrize("q", [-1.0, -0.4, 0.0, 0.5, 1.0])
    def test_single_qubit_formula(self, q):
        circuit = qubo_to_circuit([[q]], QaoaAngles(GAMMA, BETA), rz_sign=1, mixer_sign=1)
        theta = GAMMA * q / 4
        expected = (1 + math.sin(2 * BETA) * math.sin(theta)) / 2
        assert simulate_statevector(circuit).probability("0") == pytest.approx(expected, abs=1e-12)

    def test_zero_beta_is_uniform(self):
        dist = simulate_statevector(qubo_to_circuit(REFERENCE_QUBO, QaoaAngles(GAMMA, 0.0)))
        assert np.allclose(dist.probabilities, 1 / 64, atol=1e-12)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_matches_dense_oracle(self, n, rng):
        for _ in range(10):
            angles = QaoaAngles(float(rng.uniform(0, 2 * math.pi)), float(rng.uniform(0, math.pi)))
            circuit = qubo_to_circuit(_random_upper(rng, n), angles, rz_sign=1)
            dist = simulate_statevector(circuit)
            assert np.allclose(dist.probabilities, _oracle_probabilities(circuit), atol=1e-10)
            native = transpile_native(circuit)
            assert np.allclose(
                simulate_statevector(native).probabilities, _oracle_probabilities(native), atol=1e-10
            )

    def test_first_qubit_is_most_significant(self):
        circuit = CircuitIR(n=2, gates=(Gate("Rx", (1,), math.pi),))
        dist = simulate_statevector(circuit)
        assert dist.probability("10") == pytest.approx(1.0, abs=1e-12)
        assert dist.most_likely()[0][0] == "10"

    def test_resource_limit(self):
        with pytest.raises(ResourceLimitError):
            simulate_statevector(CircuitIR(n=5), max_qubits=4)
        with pytest.raises(ResourceLimitError):
            unitary_of(CircuitIR(n=11))

    def test_distribution_validation(self):
        with pytest.raises(InvalidInputError):
            Distribution(n=1, probabilities=np.array([0.5, 0.6]))
        with pytest.raises(InvalidInputError):
            Distribution(n=2, probabilities=np.array([0.5, 0.5]))
        dist = Distribution.uniform(3)
        assert dist.probability("101") == pytest.approx(1 / 8)


class TestTranspile:
    def test_zz_equivalence(self):
        native = transpile_native(CircuitIR(n=2, gates=(Gate("ZZ", (1, 2), 0.3),)))
        assert [g.name for g in native.gates] == ["Ry", "Ry", "XX", "Ry", "Ry"]
        expected = np.diag(np.exp(-1j * 0.3 * np.array([1, -1, -1, 1])))
        actual = unitary_of(native)
        overlap = abs(np.trace(expected.conj().T @ actual)) / 4
        assert overlap == pytest.approx(1.0, abs=1e-12)

    def test_without_zz_is_unchanged(self):
        circuit = qubo_to_circuit(np.diag([0.5, -1.0]), QaoaAngles(GAMMA, BETA))
        assert transpile_native(circuit) == circuit

    def test_reference_distribution_preserved(self):
        circuit = qubo_to_circuit(REFERENCE_QUBO, QaoaAngles(GAMMA, BETA), rz_sign=1)
        native = transpile_native(circuit)
        assert native.count("ZZ") == 0
        assert native.count("XX") == circuit.count("ZZ")
        assert np.allclose(
            simulate_statevector(circuit).probabilities,
            simulate_statevector(native).probabilities,
            atol=1e-10,
        )


class TestSampling:
    def test_point_mass(self):
        circuit = CircuitIR(n=2, gates=(Gate("Rx", (1,), math.pi),))
        assert sample(simulate_statevector(circuit), 20, seed=3) == ["10"] * 20

    def test_deterministic_with_seed(self):
        dist = simulate_statevector(qubo_to_circuit(REFERENCE_QUBO, QaoaAngles(GAMMA, BETA)))
        assert sample(dist, 50, seed=42) == sample(dist, 50, seed=42)
        assert sample_uniform(6, 50, seed=42) == sample_uniform(6, 50, seed=42)

    def test_uniform_frequencies(self):
        shots = 100_000
        draws = sample_uniform(3, shots, seed=0)
        sigma = math.sqrt((1 / 8) * (7 / 8) / shots)
        for k in range(8):
            frequency = draws.count(format(k, "03b")) / shots
            assert abs(frequency - 1 / 8) < 4 * sigma

    def test_shots_validation(self):
        with pytest.raises(InvalidInputError):
            sample(Distribution.uniform(2), 0)
        with pytest.raises(InvalidInputError):
            sample_uniform(2, 0)


class TestInterchange:
    def test_empty_circuit(self):
        text = export_circuit_text(CircuitIR(n=2, gates=(), measure=False))
        assert text == "# schnorr-qaoa circuit v1\nqubits 2\n"

    def test_single_gate(self):
        text = export_circuit_text(CircuitIR(n=1, gates=(Gate("Rz", (1,), 0.5),)))
        assert text.splitlines()[2] == "Rz 1 0.5"
        assert text.endswith("measure\n")

    def test_round_trip(self):
        circuit = transpile_native(qubo_to_circuit(REFERENCE_QUBO, QaoaAngles(GAMMA, BETA)))
        text = export_circuit_text(circuit)
        parsed = parse_circuit_text(text)
        assert parsed == circuit
        assert export_circuit_text(parsed) == text

    def test_malformed(self):
        with pytest.raises(MalformedCircuitError) as excinfo:
            parse_circuit_text("qubits 2\n")
        assert excinfo.value.line_number == 1
        with pytest.raises(MalformedCircuitError) as excinfo:
            parse_circuit_text("# schnorr-qaoa circuit v1\nqubits 2\nCNOT 1 2 0.1\n")
        assert excinfo.value.line_number == 3
        with pytest.raises(MalformedCircuitError):
            parse_circuit_text("# schnorr-qaoa circuit v1\nqubits 2\nRx 1 abc\n")
