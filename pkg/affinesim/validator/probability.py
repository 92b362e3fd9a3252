from fractions import Fraction

import numpy as np

from affinesim.circuit import marginal_probability, probability_by_counting
from affinesim.f2core import BitVec
from affinesim.oracle import dense_state, random_clifford_circuit
from affinesim.signature import ExactScalar
from affinesim.validator.abc_validator import AbstractValidator


def as_fraction(value: ExactScalar) -> Fraction:
    if value.is_zero:
        return Fraction(0)

    return Fraction(1, 2 ** value.dyadic_exponent())


class ProbabilityValidator(AbstractValidator):
    """Marginal probabilities are dyadic, match the dense state, and full outcomes sum to one"""

    max_length = 20

    def validate_trial(self, name: str, rng: np.random.Generator):
        n = int(rng.integers(1, self.settings.selftest_max_qubits + 1))
        circuit = random_clifford_circuit(n, int(rng.integers(self.max_length + 1)), rng)
        input_bits = BitVec.from_bits(int(v) for v in rng.integers(2, size=n))

        state = dense_state(circuit, input_bits, self.settings.dense_limit)
        dense_probs = np.abs(state) ** 2

        # random measured subset
        measured = {int(q): int(rng.integers(2)) for q in rng.choice(n, size=int(rng.integers(n + 1)), replace=False)}
        exact = marginal_probability(circuit, input_bits, measured)

        if exact != probability_by_counting(circuit, input_bits, measured):
            raise ValueError(f"Contraction [{exact!r}] and support counting disagree for {measured}")

        mask = np.ones(1 << n, dtype=bool)
        idx = np.arange(1 << n)

        for q, bit in measured.items():
            mask &= ((idx >> (n - 1 - q)) & 1) == bit

        expected = float(dense_probs[mask].sum())

        if abs(exact.to_complex().real - expected) > self.settings.tolerance:
            raise ValueError(f"Probability [{exact!r}] differs from dense value [{expected}] for {measured}")

        total = sum(as_fraction(marginal_probability(circuit, input_bits, {q: (x >> (n - 1 - q)) & 1 for q in range(n)})) for x in range(1 << n))

        if total != 1:
            raise ValueError(f"Full outcome probabilities sum to [{total}]")
