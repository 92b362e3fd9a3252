import numpy as np

from affinesim.canonical import unitarize
from affinesim.oracle import pauli_dense, random_unitary_signature
from affinesim.pauli import clifford_tableau_of, pauli_single
from affinesim.signature import signature_matrix
from affinesim.validator.abc_validator import AbstractValidator


class TableauValidator(AbstractValidator):
    """Generator images of affine unitaries are Pauli operators matching dense conjugation"""

    def validate_trial(self, name: str, rng: np.random.Generator):
        n = int(rng.integers(1, self.settings.selftest_max_qubits + 1))
        f = random_unitary_signature(n, rng)

        tableau = clifford_tableau_of(f)

        if not tableau.is_symplectic():
            raise ValueError(f"Tableau is not symplectic: {tableau.format_lines()}")

        u = signature_matrix(unitarize(f), self.settings.dense_limit)

        for kind, images in (("X", tableau.x_images), ("Z", tableau.z_images)):
            for j, image in enumerate(images):
                expected = u @ pauli_dense(pauli_single(kind, j, n)) @ u.conj().T
                self.assert_close(pauli_dense(image), expected, f"image of {kind}{j + 1}")
