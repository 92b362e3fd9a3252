import numpy as np

from affinesim.circuit import GateKind
from affinesim.oracle import GATE_MATRICES
from affinesim.signature import cnot_signature, h_signature, p_signature, signature_matrix
from affinesim.validator.abc_validator import AbstractValidator


class GeneratorValidator(AbstractValidator):
    """Matrices of the H, P and CNOT signatures match the literal gate matrices"""

    generators = {
        GateKind.H: h_signature,
        GateKind.P: p_signature,
        GateKind.CNOT: cnot_signature,
    }

    def get_trials(self):
        return [f"{self.__class__.__name__}_0000"]

    def validate_trial(self, name: str, rng: np.random.Generator):
        for kind, build in self.generators.items():
            actual = signature_matrix(build(), self.settings.dense_limit)
            self.assert_close(actual, GATE_MATRICES[kind], f"{kind.keyword} matrix", tol=self.settings.literal_tolerance)
