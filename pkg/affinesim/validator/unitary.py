import numpy as np

from affinesim.canonical import UnitaryVerdict, cf_matrix, check_unitary, extract_form, unitarize
from affinesim.f2core import is_nonsingular
from affinesim.oracle import dense_is_unitary, dense_rank, random_affine_signature, random_singular_signature, random_unitary_signature
from affinesim.signature import signature_matrix
from affinesim.validator.abc_validator import AbstractValidator


class UnitaryValidator(AbstractValidator):
    """Nonsingular signatures become unitary after rescaling, and C_f is nonsingular"""

    def validate_trial(self, name: str, rng: np.random.Generator):
        n = int(rng.integers(1, self.settings.selftest_max_qubits + 1))
        f = random_unitary_signature(n, rng)

        check = check_unitary(f)

        if check.is_singular:
            raise ValueError(f"Rescaled circuit signature reported as singular: {check.reason}")

        form = extract_form(f)

        if not is_nonsingular(cf_matrix(form)):
            raise ValueError("Matrix [A; C3] of a circuit signature is singular")

        if form.to_signature() != f:
            raise ValueError("Canonical form does not rebuild the original signature")

        u = signature_matrix(unitarize(f), self.settings.dense_limit)

        if not dense_is_unitary(u, self.settings.tolerance):
            raise ValueError("Unitarized signature matrix is not unitary")

        if check.verdict == UnitaryVerdict.UNITARY and not dense_is_unitary(signature_matrix(f, self.settings.dense_limit), self.settings.tolerance):
            raise ValueError("Signature reported as unitary without rescaling is not unitary")


class SingularityValidator(AbstractValidator):
    """Dense rank and check_unitary agree on nonsingular, singular and arbitrary signatures"""

    def validate_trial(self, name: str, rng: np.random.Generator):
        n = int(rng.integers(1, self.settings.selftest_max_qubits + 1))
        source = int(rng.integers(3))

        if source == 0:
            f = random_unitary_signature(n, rng)
        elif source == 1:
            f = random_singular_signature(n, rng)
        else:
            f = random_affine_signature(2 * n, rng)

        dense_nonsingular = dense_rank(signature_matrix(f, self.settings.dense_limit)) == 1 << n
        check = check_unitary(f)

        if dense_nonsingular == check.is_singular:
            raise ValueError(f"Dense nonsingularity [{dense_nonsingular}] disagrees with verdict [{check}]")
