import numpy as np

from affinesim.circuit import circuit_signature, compose_circuit_signature
from affinesim.oracle import dense_circuit, random_clifford_circuit
from affinesim.signature import signature_matrix
from affinesim.validator.abc_validator import AbstractValidator


class CompositionValidator(AbstractValidator):
    """Circuit signatures against the dense matrix product"""

    max_length = 20

    def validate_trial(self, name: str, rng: np.random.Generator):
        n = int(rng.integers(1, self.settings.selftest_max_qubits + 1))
        circuit = random_clifford_circuit(n, int(rng.integers(self.max_length + 1)), rng)

        f = circuit_signature(circuit)
        f.check_invariants()

        self.assert_close(signature_matrix(f, self.settings.dense_limit), dense_circuit(circuit, self.settings.dense_limit), "circuit matrix")

        if compose_circuit_signature(circuit) != f:
            raise ValueError("Folded compose and wire sweep produced different signatures")
