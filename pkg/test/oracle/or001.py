from pytest import raises

import numpy as np

from affinesim import AffSimContractError, AffSimDenseLimitError, Circuit, Gate, GateKind
from affinesim.oracle import (
    GATE_MATRICES,
    dense_circuit,
    dense_gate,
    dense_is_clifford,
    dense_is_unitary,
    dense_rank,
    dense_signature_matrix,
    dense_state,
    random_affine_signature,
    random_clifford_circuit,
    random_singular_signature,
    random_unitary_signature,
)
from affinesim.signature import signature_matrix


def test_dense_gate(helper):
    assert helper.is_close(dense_gate(Gate.make(GateKind.H, 0), 2), np.kron(helper.H, helper.I2))
    assert helper.is_close(dense_gate(Gate.make(GateKind.P, 2), 3), np.kron(np.eye(4), helper.P))
    assert helper.is_close(dense_gate(Gate.make(GateKind.CNOT, 0, 1), 2), helper.CNOT)

    # Non adjacent operands
    m = dense_gate(Gate.make(GateKind.CNOT, 0, 2), 3)
    assert m[0b101, 0b100] == 1
    assert m[0b111, 0b110] == 1
    assert m[0b011, 0b011] == 1

    with raises(AffSimContractError):
        dense_gate(Gate.make(GateKind.H, 3), 2)

    with raises(AffSimDenseLimitError):
        dense_gate(Gate.make(GateKind.H, 0), 4, limit=3)


def test_dense_circuit(helper):
    circuit = Circuit(n_qubits=1, gates=(Gate.make(GateKind.H, 0), Gate.make(GateKind.P, 0)))

    # First gate is applied first
    assert helper.is_close(dense_circuit(circuit), helper.P @ helper.H)
    assert helper.is_close(dense_state(circuit, helper.bits("1")), (helper.P @ helper.H)[:, 1])
    assert helper.is_close(GATE_MATRICES[GateKind.Y], 1j * helper.Y)


def test_dense_predicates(helper):
    assert dense_is_unitary(helper.H)
    assert not dense_is_unitary(helper.H * 2)
    assert dense_is_clifford(helper.CNOT)
    assert dense_is_clifford(np.kron(helper.H, helper.P))

    # T gate is unitary but not Clifford
    t = np.diag([1, np.exp(1j * np.pi / 4)])
    assert dense_is_unitary(t)
    assert not dense_is_clifford(t)

    assert dense_rank(np.ones((4, 4))) == 1

    with raises(AffSimDenseLimitError):
        dense_is_clifford(np.eye(64))


def test_dense_signature_matrix(helper):
    for seed in range(10):
        f = random_affine_signature(6, seed)

        # Exhaustive evaluation agrees with the support enumeration
        assert helper.is_close(dense_signature_matrix(f), signature_matrix(f))


def test_random_generators(helper):
    circuit = random_clifford_circuit(4, 50, 1)

    assert circuit.n_qubits == 4
    assert len(circuit) == 50
    assert circuit == random_clifford_circuit(4, 50, 1)
    assert {g.kind for g in circuit.gates} <= {GateKind.H, GateKind.P, GateKind.CNOT}

    # CNOT never fits a single qubit
    assert all(g.kind != GateKind.CNOT for g in random_clifford_circuit(1, 20, 0).gates)

    for seed in range(10):
        f = random_affine_signature(5, seed)
        f.check_invariants()
        assert not f.is_zero

        # Unitary up to a scalar factor
        m = signature_matrix(random_unitary_signature(2, seed))
        mm = m @ m.conj().T
        assert helper.is_close(mm, mm[0, 0] * np.eye(4))

    with raises(AffSimContractError):
        random_singular_signature(0, 0)
