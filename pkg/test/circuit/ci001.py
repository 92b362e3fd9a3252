from pytest import raises

from affinesim import AffSimContractError, AffSimParseError, Circuit, Gate, GateKind, expand_macros
from affinesim.parser import parse_circuit, parse_circuit_file


def test_parse_example(helper):
    circuit = parse_circuit_file(helper.config_file("ghz.qc"))

    assert circuit.n_qubits == 2
    assert [str(g) for g in circuit.gates] == ["h 0", "cnot 0 1"]
    assert len(circuit) == 2


def test_parse_comments():
    circuit = parse_circuit("# header comment\nqubits 3 # three\n\nH 0\ncz 2 1  # macro\ny 1\n")

    assert circuit.n_qubits == 3
    assert circuit.gates == (
        Gate.make(GateKind.H, 0),
        Gate.make(GateKind.CZ, 2, 1),
        Gate.make(GateKind.Y, 1),
    )


def test_parse_errors():
    # Repeated operand
    with raises(AffSimParseError) as e:
        parse_circuit("qubits 2\nh 0\ncnot 1 1\n", "dup.qc")

    assert e.value.line == 3
    assert e.value.column == 8
    assert e.value.short_message().startswith("dup.qc:3:8:")

    # Qubit out of range
    with raises(AffSimParseError) as e:
        parse_circuit("qubits 2\nh 5\n")

    assert (e.value.line, e.value.column) == (2, 3)

    # Unknown gate
    with raises(AffSimParseError) as e:
        parse_circuit("qubits 2\nfoo 0\n")

    assert "Unknown gate [foo]" in e.value.message

    # Wrong number of operands
    with raises(AffSimParseError) as e:
        parse_circuit("qubits 2\ncnot 0\n")

    assert e.value.line == 2

    with raises(AffSimParseError):
        parse_circuit("h 0\n")

    with raises(AffSimParseError):
        parse_circuit("qubits 2\nqubits 3\n")

    with raises(AffSimParseError):
        parse_circuit("qubits -1\n")

    with raises(AffSimParseError):
        parse_circuit("")

    with raises(AffSimParseError):
        parse_circuit_file("does_not_exist.qc")


def test_gate_model():
    assert GateKind.from_keyword("CNOT") == GateKind.CNOT
    assert GateKind.CZ.is_macro
    assert not GateKind.P.is_macro
    assert str(Gate.make(GateKind.CNOT, 0, 1)) == "cnot 0 1"

    with raises(AffSimContractError):
        GateKind.from_keyword("toffoli")

    with raises(ValueError):
        Gate.make(GateKind.CNOT, 0)

    with raises(ValueError):
        Gate.make(GateKind.CNOT, 1, 1)

    with raises(ValueError):
        Circuit(n_qubits=1, gates=(Gate.make(GateKind.H, 1),))


def test_expand_macros():
    circuit = Circuit(
        n_qubits=2,
        gates=(
            Gate.make(GateKind.Z, 0),
            Gate.make(GateKind.X, 1),
            Gate.make(GateKind.CZ, 0, 1),
        ),
    )

    expanded = expand_macros(circuit)

    assert [str(g) for g in expanded.gates] == [
        "p 0",
        "p 0",
        "h 1",
        "p 1",
        "p 1",
        "h 1",
        "h 1",
        "cnot 0 1",
        "h 1",
    ]
    assert all(not g.kind.is_macro for g in expanded.gates)
