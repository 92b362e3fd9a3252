from typing import Optional

import numpy as np

from affinesim.circuit import Circuit, Gate, GateKind
from affinesim.error import AffSimContractError, AffSimDenseLimitError
from affinesim.f2core import BitVec
from affinesim.pauli import PauliOperator, pauli_single
from affinesim.signature import DEFAULT_DENSE_LIMIT, AffineSignature


DEFAULT_TOLERANCE = 1e-9

_S = 1 / np.sqrt(2)

# Matrices as lowered by the circuit module, Y is the macro value Z X = iY
GATE_MATRICES = {
    GateKind.H: np.array([[_S, _S], [_S, -_S]], dtype=complex),
    GateKind.P: np.array([[1, 0], [0, 1j]], dtype=complex),
    GateKind.CNOT: np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex),
    GateKind.X: np.array([[0, 1], [1, 0]], dtype=complex),
    GateKind.Y: np.array([[0, 1], [-1, 0]], dtype=complex),
    GateKind.Z: np.array([[1, 0], [0, -1]], dtype=complex),
    GateKind.CZ: np.diag([1, 1, 1, -1]).astype(complex),
}


def _check_limit(n: int, limit: Optional[int]):
    if limit is None:
        limit = DEFAULT_DENSE_LIMIT

    if n > limit:
        raise AffSimDenseLimitError(n, limit)


def _bits_index(bits: BitVec) -> int:
    """Qubit 0 is the most significant bit"""
    return sum(bit << (bits.len - 1 - j) for j, bit in enumerate(bits))


def dense_gate(gate: Gate, n: int, limit: Optional[int] = None) -> np.ndarray:
    _check_limit(n, limit)

    for q in gate.qubits:
        if q >= n:
            raise AffSimContractError(f"Qubit index [{q}] is out of range for [{n}] qubits")

    local = GATE_MATRICES[gate.kind]
    idx = np.arange(1 << n)

    sub = np.zeros(1 << n, dtype=np.int64)
    qubit_mask = 0

    for q in gate.qubits:
        sub = (sub << 1) | ((idx >> (n - 1 - q)) & 1)
        qubit_mask |= 1 << (n - 1 - q)

    rest = idx & ~qubit_mask

    return local[sub[:, None], sub[None, :]] * (rest[:, None] == rest[None, :])


def dense_circuit(circuit: Circuit, limit: Optional[int] = None) -> np.ndarray:
    """Product of gate matrices, the first gate is applied first"""
    n = circuit.n_qubits
    _check_limit(n, limit)

    res = np.eye(1 << n, dtype=complex)

    for gate in circuit.gates:
        res = dense_gate(gate, n, limit) @ res

    return res


def dense_state(circuit: Circuit, input_bits: BitVec, limit: Optional[int] = None) -> np.ndarray:
    if input_bits.len != circuit.n_qubits:
        raise AffSimContractError(f"Input length [{input_bits.len}] does not match [{circuit.n_qubits}] qubits")

    return dense_circuit(circuit, limit)[:, _bits_index(input_bits)]


def dense_signature_matrix(f: AffineSignature, limit: Optional[int] = None) -> np.ndarray:
    """Signature matrix built by evaluating f on every assignment"""
    if f.arity % 2:
        raise AffSimContractError(f"Signature arity [{f.arity}] must be even")

    n = f.arity // 2
    _check_limit(n, limit)

    res = np.zeros((1 << n, 1 << n), dtype=complex)

    for x in range(1 << f.arity):
        row = sum(((x >> j) & 1) << (n - 1 - j) for j in range(n))
        col = sum(((x >> j) & 1) << (j - n) for j in range(n, 2 * n))
        res[row, col] = f.evaluate_bits(x).to_complex()

    return res


def pauli_dense(pauli: PauliOperator) -> np.ndarray:
    """M[x, y] = i^c * (-1)^(r.x) when x + y = e"""
    n = pauli.n
    dim = 1 << n

    e = _bits_index(pauli.e)
    r = _bits_index(pauli.r)

    rows = np.arange(dim)
    signs = np.array([(-1) ** bin(x & r).count("1") for x in rows])

    res = np.zeros((dim, dim), dtype=complex)
    res[rows, rows ^ e] = (1j**pauli.c) * signs

    return res


def dense_is_unitary(m: np.ndarray, tol: float = DEFAULT_TOLERANCE) -> bool:
    return bool(np.allclose(m @ m.conj().T, np.eye(m.shape[0]), atol=tol, rtol=0))


def _qubit_count(m: np.ndarray) -> int:
    dim = m.shape[0]

    if m.shape != (dim, dim) or dim < 1 or dim & (dim - 1):
        raise AffSimContractError(f"Matrix of shape {m.shape} is not square with a power of two dimension")

    return dim.bit_length() - 1


def dense_in_pauli_group(m: np.ndarray, tol: float = DEFAULT_TOLERANCE) -> Optional[PauliOperator]:
    """Recover (e, r, c) from the entries of m, None if m is not a Pauli operator"""
    n = _qubit_count(m)

    nonzero = np.flatnonzero(np.abs(m[:, 0]) > tol)

    if len(nonzero) != 1:
        return None

    e = int(nonzero[0])
    base = m[e, 0]

    r = 0

    for j in range(n):
        y = 1 << (n - 1 - j)
        ratio = m[e ^ y, y] / base

        if abs(ratio + 1) <= tol:
            r |= y
        elif abs(ratio - 1) > tol:
            return None

    # base = i^c * (-1)^(r.e)
    phase = base * (-1) ** bin(r & e).count("1")
    c = int(np.argmin([abs(phase - 1j**k) for k in range(4)]))

    if abs(phase - 1j**c) > tol:
        return None

    def to_bitvec(index: int) -> BitVec:
        return BitVec.from_bits((index >> (n - 1 - j)) & 1 for j in range(n))

    candidate = PauliOperator(n=n, e=to_bitvec(e), r=to_bitvec(r), c=c)

    if not np.allclose(m, pauli_dense(candidate), atol=tol, rtol=0):
        return None

    return candidate


def dense_is_clifford(m: np.ndarray, tol: float = DEFAULT_TOLERANCE) -> bool:
    n = _qubit_count(m)

    if n > 5:
        raise AffSimDenseLimitError(n, 5)

    if not dense_is_unitary(m, tol):
        return False

    for j in range(n):
        for kind in ("X", "Z"):
            image = m @ pauli_dense(pauli_single(kind, j, n)) @ m.conj().T

            if dense_in_pauli_group(image, tol) is None:
                return False

    return True


def dense_rank(m: np.ndarray, threshold: float = 1e-6) -> int:
    return int(np.linalg.matrix_rank(m, tol=threshold))
