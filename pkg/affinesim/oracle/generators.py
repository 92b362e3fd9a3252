from typing import Optional, Sequence

import numpy as np

from affinesim.circuit import Circuit, Gate, GateKind, circuit_signature
from affinesim.error import AffSimContractError
from affinesim.signature import AffineSignature, ExactScalar, canonical_signature, compose


PRIMITIVE_KINDS = (GateKind.H, GateKind.P, GateKind.CNOT)


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed

    return np.random.default_rng(seed)


def random_clifford_circuit(n: int, length: int, seed, kinds: Sequence[GateKind] = PRIMITIVE_KINDS) -> Circuit:
    if n < 1 and length:
        raise AffSimContractError("Cannot place gates on a circuit without qubits")

    rng = _rng(seed)
    allowed = [kind for kind in kinds if kind.arity <= n]

    if length and not allowed:
        raise AffSimContractError(f"No gate kind from {[k.keyword for k in kinds]} fits [{n}] qubits")

    gates = []

    for _ in range(length):
        kind = allowed[int(rng.integers(len(allowed)))]
        qubits = rng.choice(n, size=kind.arity, replace=False)
        gates.append(Gate(kind=kind, qubits=tuple(int(q) for q in qubits)))

    return Circuit(n_qubits=n, gates=tuple(gates))


def random_affine_signature(arity: int, seed, max_abs_p: int = 4) -> AffineSignature:
    """
    Nonzero signature with a random consistent support system, random phase and random scalar.
    Constraints are drawn through a random point, so the support is never empty.
    """
    rng = _rng(seed)
    full = (1 << arity) - 1

    point = int(rng.integers(1 << arity)) if arity else 0
    rows = []

    for _ in range(int(rng.integers(arity + 1))):
        mask = int(rng.integers(1 << arity)) & full if arity else 0
        rows.append((mask, bin(mask & point).count("1") & 1))

    diag = [int(v) for v in rng.integers(4, size=arity)]
    cross = [0] * arity

    for j in range(arity):
        for l in range(j + 1, arity):
            if rng.integers(2):
                cross[j] |= 1 << l
                cross[l] |= 1 << j

    scalar = ExactScalar(int(rng.integers(-max_abs_p, max_abs_p + 1)), int(rng.integers(8)))

    return canonical_signature(arity, scalar, rows, diag, cross)


def random_unitary_signature(n: int, seed, length: Optional[int] = None) -> AffineSignature:
    """Signature of a random H/P/CNOT circuit, rescaled by a random ring element"""
    rng = _rng(seed)

    if length is None:
        length = int(rng.integers(4 * n + 8))

    f = circuit_signature(random_clifford_circuit(n, length, rng))
    factor = ExactScalar(int(rng.integers(-4, 5)), int(rng.integers(8)))

    return f.scale(factor)


def random_singular_signature(n: int, seed) -> AffineSignature:
    """
    Random unitary signature composed with a rank deficient factor on one qubit:
    either the projector |0><0| or the all ones 2x2 matrix.
    """
    if n < 1:
        raise AffSimContractError("Singular signatures require at least one qubit")

    rng = _rng(seed)
    u = random_unitary_signature(n, rng)

    j = int(rng.integers(n))
    k = 2 * n

    rows = [((1 << q) | (1 << (k - 1 - q)), 0) for q in range(n) if q != j]

    if rng.integers(2):
        rows.extend([(1 << j, 0), (1 << (k - 1 - j), 0)])

    factor = canonical_signature(k, ExactScalar.one(), rows, [0] * k, [0] * k)

    if rng.integers(2):
        return compose(u, factor)

    return compose(factor, u)
