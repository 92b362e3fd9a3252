from pathlib import Path
from typing import Optional, Union

from affinesim.circuit.model import Circuit, Gate, GateKind
from affinesim.error import AffSimContractError
from affinesim.parser._scanner import LineScanner, read_text


def parse_circuit(text: str, path: Optional[Union[str, Path]] = None) -> Circuit:
    """
    Grammar: "qubits <n>" first, then one gate per line.
    Gates: h q, p q, x q, y q, z q, cnot q1 q2, cz q1 q2.
    """
    scanner = LineScanner(text, path)
    n_qubits = None
    gates = []

    for line in scanner:
        if n_qubits is None:
            if line.keyword != "qubits":
                raise scanner.error(f"Expected [qubits <n>] header, got [{line.tokens[0].text}]", line)

            scanner.expect_arity(line, 2)
            n_qubits = scanner.integer(line, line.tokens[1], minimum=0)
            continue

        if line.keyword == "qubits":
            raise scanner.error("Duplicate [qubits] header", line)

        try:
            kind = GateKind.from_keyword(line.keyword)
        except AffSimContractError as e:
            raise scanner.error(str(e), line) from None

        scanner.expect_arity(line, kind.arity + 1)
        qubits = []

        for token in line.tokens[1:]:
            q = scanner.integer(line, token, minimum=0)

            if q >= n_qubits:
                raise scanner.error(f"Qubit index [{q}] is out of range for [{n_qubits}] qubits", line, token)

            if q in qubits:
                raise scanner.error(f"Gate [{kind.keyword}] has duplicate operands", line, token)

            qubits.append(q)

        gates.append(Gate(kind=kind, qubits=tuple(qubits)))

    if n_qubits is None:
        raise scanner.error("Missing [qubits <n>] header")

    return Circuit(n_qubits=n_qubits, gates=tuple(gates))


def parse_circuit_file(path: Union[str, Path]) -> Circuit:
    return parse_circuit(read_text(path), path)
