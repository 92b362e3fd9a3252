from logging import getLogger, NullHandler
from typing import List, Optional

from affinesim.error import AffSimContractError
from affinesim.f2core import BitVec, iter_bits
from affinesim.signature import (
    AffineContraction,
    AffineSignature,
    cnot_signature,
    compose,
    h_signature,
    identity_signature,
    p_signature,
)

from .model import Circuit, Gate, GateKind


logger = getLogger(__name__)
logger.addHandler(NullHandler())


def _expand_gate(gate: Gate) -> List[Gate]:
    kind = gate.kind

    if not kind.is_macro:
        return [gate]

    if kind == GateKind.Z:
        q = gate.qubits[0]
        return [Gate.make(GateKind.P, q), Gate.make(GateKind.P, q)]

    if kind == GateKind.X:
        q = gate.qubits[0]
        return [Gate.make(GateKind.H, q)] + _expand_gate(Gate.make(GateKind.Z, q)) + [Gate.make(GateKind.H, q)]

    if kind == GateKind.Y:
        # Z X = iY, so the macro is exact only up to global phase
        q = gate.qubits[0]
        return _expand_gate(Gate.make(GateKind.X, q)) + _expand_gate(Gate.make(GateKind.Z, q))

    if kind == GateKind.CZ:
        a, b = gate.qubits
        return [Gate.make(GateKind.H, b), Gate.make(GateKind.CNOT, a, b), Gate.make(GateKind.H, b)]

    raise AffSimContractError(f"No expansion for gate [{kind.keyword}]")


def expand_macros(circuit: Circuit) -> Circuit:
    gates = []

    for gate in circuit.gates:
        gates.extend(_expand_gate(gate))

    return Circuit(n_qubits=circuit.n_qubits, gates=tuple(gates))


def _check_operands(gate: Gate, n: int):
    for q in gate.qubits:
        if q >= n:
            raise AffSimContractError(f"Qubit index [{q}] is out of range for [{n}] qubits")


_PRIMITIVE_SIGNATURES = {
    GateKind.H: h_signature,
    GateKind.P: p_signature,
    GateKind.CNOT: cnot_signature,
}


def gate_signature(gate: Gate, n: int) -> AffineSignature:
    """
    Arity 2n signature of a single gate acting on n qubits.
    Variable j is the output bit of qubit j, variable 2n-1-j is its input bit.
    """
    _check_operands(gate, n)

    if gate.kind.is_macro:
        return circuit_signature(Circuit(n_qubits=n, gates=tuple(_expand_gate(gate))))

    engine = AffineContraction()
    outputs: List[Optional[int]] = [None] * n
    inputs: List[Optional[int]] = [None] * n

    local = engine.attach(_PRIMITIVE_SIGNATURES[gate.kind]())
    m = len(gate.qubits)

    for i, q in enumerate(gate.qubits):
        outputs[q] = local[i]
        inputs[q] = local[2 * m - 1 - i]

    for q in range(n):
        if outputs[q] is None:
            outputs[q], inputs[q] = engine.attach(identity_signature(1))

    return engine.to_signature(outputs + inputs[::-1])


class _WireSweep:
    """
    Pushes gates through a contraction while every qubit wire is a tracked affine form.
    Variables that drop off all wires are summed out immediately.
    """

    def __init__(self, n: int, input_bits: Optional[BitVec] = None):
        self.n = n
        self.engine = AffineContraction()
        self.inputs: List[int] = []

        for j in range(n):
            if input_bits is None:
                v = self.engine.new_var()
                self.engine.external_mask |= 1 << v
                self.inputs.append(v)
                self.engine.add_form(1 << v, 0)
            else:
                self.engine.add_form(0, input_bits[j])

    def apply(self, gate: Gate):
        _check_operands(gate, self.n)

        if gate.kind.is_macro:
            for primitive in _expand_gate(gate):
                self.apply(primitive)

            return

        forms = self.engine.forms

        if gate.kind == GateKind.H:
            q = gate.qubits[0]
            mask, const = forms[q]

            v = self.engine.new_var()
            self.engine.add_product(mask, const, 1 << v, 0)
            self.engine.scale(p=-1)

            forms[q] = (1 << v, 0)
            self._sum_dead(mask)

        elif gate.kind == GateKind.P:
            mask, const = forms[gate.qubits[0]]
            self.engine.add_square(mask, const, 1)

        elif gate.kind == GateKind.CNOT:
            a, b = gate.qubits
            forms[b] = (forms[b][0] ^ forms[a][0], forms[b][1] ^ forms[a][1])

    def _sum_dead(self, candidates: int):
        engine = self.engine
        candidates &= ~engine.external_mask

        if not candidates:
            return

        referenced = engine.forms_mask()
        edits = engine.form_edits

        for v in iter_bits(candidates):
            bit = 1 << v

            if not engine.live_mask & bit or referenced & bit:
                continue

            engine.sum_out(v)

            # a Gauss sum may rewrite wires through a new constraint
            if engine.form_edits != edits:
                referenced = engine.forms_mask()
                edits = engine.form_edits

    def close(self) -> AffineSignature:
        engine = self.engine
        outputs = []

        for j in range(self.n):
            y = engine.new_var()
            engine.external_mask |= 1 << y
            outputs.append(y)

        wires = engine.forms
        engine.forms = []

        for y, (mask, const) in zip(outputs, wires):
            engine.add_constraint(mask | (1 << y), const, prefer=1 << y)

        engine.sum_all_except(outputs + self.inputs)

        logger.debug(f"Wire sweep closed on [{self.n}] qubits with [{len(engine.rows)}] constraints")

        return engine.to_signature(outputs + self.inputs[::-1])


def circuit_signature(circuit: Circuit) -> AffineSignature:
    """Arity 2n signature whose matrix is the product of gate matrices, last gate leftmost"""
    sweep = _WireSweep(circuit.n_qubits)

    for gate in circuit.gates:
        sweep.apply(gate)

    return sweep.close()


def compose_circuit_signature(circuit: Circuit) -> AffineSignature:
    """Same value as circuit_signature, built by folding compose over gate signatures"""
    n = circuit.n_qubits
    result = identity_signature(n)

    for gate in circuit.gates:
        result = compose(gate_signature(gate, n), result)

    return result


def state_signature(circuit: Circuit, input_bits: BitVec) -> AffineSignature:
    """Arity n output state for a computational basis input, variable j is qubit j"""
    if input_bits.len != circuit.n_qubits:
        raise AffSimContractError(f"Input length [{input_bits.len}] does not match [{circuit.n_qubits}] qubits")

    sweep = _WireSweep(circuit.n_qubits, input_bits)

    for gate in circuit.gates:
        sweep.apply(gate)

    return sweep.close()

