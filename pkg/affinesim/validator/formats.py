import numpy as np

from affinesim.converter import circuit_to_text, signature_to_text
from affinesim.oracle import random_affine_signature, random_clifford_circuit
from affinesim.circuit import GateKind
from affinesim.parser import parse_circuit, parse_signature
from affinesim.validator.abc_validator import AbstractValidator


class FormatValidator(AbstractValidator):
    """parse, print, parse is the identity"""

    def validate_trial(self, name: str, rng: np.random.Generator):
        n = int(rng.integers(1, 6))
        circuit = random_clifford_circuit(n, int(rng.integers(30)), rng, kinds=list(GateKind))

        text = circuit_to_text(circuit)
        parsed = parse_circuit(text)

        if parsed != circuit or circuit_to_text(parsed) != text:
            raise ValueError(f"Circuit round trip failed for:\n{text}")

        f = random_affine_signature(int(rng.integers(0, 9)), rng)

        text = signature_to_text(f)
        parsed = parse_signature(text)

        if parsed != f or signature_to_text(parsed) != text:
            raise ValueError(f"Signature round trip failed for:\n{text}")
