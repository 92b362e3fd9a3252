import numpy as np

from affinesim import Circuit, Gate, GateKind, circuit_signature, gate_signature, signature_matrix, state_signature
from affinesim.circuit import compose_circuit_signature
from affinesim.oracle import dense_circuit, dense_gate, dense_state, random_clifford_circuit
from affinesim.signature import identity_signature, signature_vector


def single(kind, *qubits, n=None):
    if n is None:
        n = max(qubits) + 1

    return Circuit(n_qubits=n, gates=(Gate.make(kind, *qubits),))


def test_hadamard_embedding(helper):
    # Qubit 0 is the most significant index bit
    assert helper.is_close(signature_matrix(circuit_signature(single(GateKind.H, 0, n=2))), np.kron(helper.H, helper.I2))
    assert helper.is_close(signature_matrix(circuit_signature(single(GateKind.H, 1, n=2))), np.kron(helper.I2, helper.H))


def test_macro_matrices(helper):
    assert helper.is_close(signature_matrix(circuit_signature(single(GateKind.X, 0))), helper.X, helper.LITERAL_TOLERANCE)
    assert helper.is_close(signature_matrix(circuit_signature(single(GateKind.Z, 0))), helper.Z, helper.LITERAL_TOLERANCE)
    assert helper.is_close(signature_matrix(circuit_signature(single(GateKind.CZ, 0, 1))), helper.CZ, helper.LITERAL_TOLERANCE)

    # Y expands to Z X = iY
    y = signature_matrix(circuit_signature(single(GateKind.Y, 0)))
    assert helper.is_close(y, 1j * helper.Y, helper.LITERAL_TOLERANCE)
    assert helper.equal_up_to_phase(y, helper.Y)


def test_reversed_cnot(helper):
    hh = np.kron(helper.H, helper.H)
    m = signature_matrix(circuit_signature(single(GateKind.CNOT, 1, 0)))

    # Control on qubit 1 is CNOT conjugated by H on both qubits
    assert helper.is_close(m, hh @ helper.CNOT @ hh)
    assert helper.is_close(m, dense_gate(Gate.make(GateKind.CNOT, 1, 0), 2))
    assert not helper.is_close(m, helper.CNOT)


def test_gate_signature(helper):
    for kind, qubits in ((GateKind.H, (2,)), (GateKind.P, (0,)), (GateKind.CNOT, (2, 0)), (GateKind.CZ, (1, 2))):
        gate = Gate.make(kind, *qubits)
        f = gate_signature(gate, 3)

        f.check_invariants()
        assert helper.is_close(signature_matrix(f), dense_gate(gate, 3))


def test_empty_circuit():
    assert circuit_signature(Circuit(n_qubits=3)) == identity_signature(3)
    assert compose_circuit_signature(Circuit(n_qubits=2)) == identity_signature(2)


def test_random_circuits(helper):
    for seed in range(20):
        circuit = random_clifford_circuit(3, 25, seed)

        swept = circuit_signature(circuit)
        folded = compose_circuit_signature(circuit)

        # Both constructions reach the same canonical form
        swept.check_invariants()
        assert swept == folded
        assert helper.is_close(signature_matrix(swept), dense_circuit(circuit))


def test_random_circuits_with_macros(helper):
    kinds = list(GateKind)

    for seed in range(10):
        circuit = random_clifford_circuit(3, 20, seed, kinds)
        assert helper.is_close(signature_matrix(circuit_signature(circuit)), dense_circuit(circuit))


def test_state_signature(helper):
    for seed in range(20):
        circuit = random_clifford_circuit(4, 30, seed)
        input_bits = helper.bits(format(seed % 16, "04b"))

        state = state_signature(circuit, input_bits)
        state.check_invariants()

        assert state.arity == 4
        assert helper.is_close(signature_vector(state), dense_state(circuit, input_bits))
