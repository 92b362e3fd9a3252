from affinesim.circuit import Circuit


def circuit_to_text(circuit: Circuit) -> str:
    lines = [f"qubits {circuit.n_qubits}"]
    lines.extend(str(gate) for gate in circuit.gates)

    return "\n".join(lines) + "\n"
