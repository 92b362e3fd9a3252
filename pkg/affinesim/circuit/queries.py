from logging import getLogger, NullHandler
from typing import Dict, Mapping

import numpy as np

from affinesim.error import AffSimContractError, AffSimInvariantViolation
from affinesim.f2core import BitVec, reduce_rows
from affinesim.signature import AffineContraction, AffineSignature, ExactScalar, conjugate, projector_signature

from .lowering import state_signature
from .model import Circuit


logger = getLogger(__name__)
logger.addHandler(NullHandler())


def _check_bits(circuit: Circuit, bits: BitVec, name: str):
    if bits.len != circuit.n_qubits:
        raise AffSimContractError(f"{name.capitalize()} length [{bits.len}] does not match [{circuit.n_qubits}] qubits")


def _check_measured(n: int, measured: Mapping[int, int]):
    for q, bit in measured.items():
        if not 0 <= q < n:
            raise AffSimContractError(f"Qubit index [{q}] is out of range for [{n}] qubits")

        if bit not in (0, 1):
            raise AffSimContractError(f"Measured value [{bit}] for qubit [{q}] is not a bit")


def amplitude(circuit: Circuit, input_bits: BitVec, output_bits: BitVec) -> ExactScalar:
    """Exact <output| U |input>"""
    _check_bits(circuit, input_bits, "input")
    _check_bits(circuit, output_bits, "output")

    return state_signature(circuit, input_bits).evaluate(output_bits)


def state_marginal(state: AffineSignature, measured: Mapping[int, int]) -> ExactScalar:
    """
    Probability of the measured outcome for an arity n state, contracted as state (x) conj(state).
    Result is zero or 2^(-s) with 0 <= s <= n.
    """
    n = state.arity
    _check_measured(n, measured)

    engine = AffineContraction()
    ket = engine.attach(state)
    bra = engine.attach(conjugate(state))

    for q in range(n):
        engine.join(bra[q], ket[q])

        if q in measured:
            (projector,) = engine.attach(projector_signature(measured[q]))
            engine.join(projector, ket[q])

        engine.sum_out(ket[q])

    result = engine.scalar

    if result.is_zero:
        return result

    s = result.dyadic_exponent()

    if s is None or not 0 <= s <= n:
        raise AffSimInvariantViolation(f"Measurement probability [{result!r}] is not of the form 2^(-s), 0 <= s <= [{n}]")

    return result


def marginal_probability(circuit: Circuit, input_bits: BitVec, measured: Mapping[int, int]) -> ExactScalar:
    _check_bits(circuit, input_bits, "input")

    return state_marginal(state_signature(circuit, input_bits), measured)


def sample_outcome(circuit: Circuit, input_bits: BitVec, seed: int) -> BitVec:
    """Full measurement outcome drawn qubit by qubit from exact conditional marginals"""
    _check_bits(circuit, input_bits, "input")

    rng = np.random.default_rng(seed)
    state = state_signature(circuit, input_bits)

    measured: Dict[int, int] = {}
    prefix = ExactScalar.one()

    for q in range(circuit.n_qubits):
        p0 = state_marginal(state, {**measured, q: 0})

        if p0.is_zero:
            bit = 1
        elif p0 == prefix:
            bit = 0
        else:
            # both are powers of 1/2, the conditional is 2^(s_prefix - s0)
            conditional = 2.0 ** (prefix.dyadic_exponent() - p0.dyadic_exponent())
            bit = 0 if rng.random() < conditional else 1

        measured[q] = bit
        prefix = p0 if bit == 0 else state_marginal(state, measured)

    logger.debug(f"Sampled outcome for [{circuit.n_qubits}] qubits with seed [{seed}]")

    return BitVec.from_bits(measured[q] for q in range(circuit.n_qubits))


def probability_by_counting(circuit: Circuit, input_bits: BitVec, measured: Mapping[int, int]) -> ExactScalar:
    """|lambda|^2 times the number of support points consistent with the outcome"""
    _check_bits(circuit, input_bits, "input")
    _check_measured(circuit.n_qubits, measured)

    state = state_signature(circuit, input_bits)

    if state.is_zero:
        return ExactScalar.zero()

    masks = [mask for _, mask, _ in state.support.rows()] + [1 << q for q in measured]
    rhs = [bit for _, _, bit in state.support.rows()] + list(measured.values())

    reduced = reduce_rows(masks, rhs, range(state.arity))

    if not reduced.consistent:
        return ExactScalar.zero()

    free = state.arity - len(reduced.rows)

    return state.scalar.abs_squared() * ExactScalar(2 * free, 0)
