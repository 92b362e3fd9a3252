from logging import getLogger, NullHandler
from pydantic import model_validator
from typing import List, Tuple

from affinesim.canonical import UnitaryVerdict, check_unitary
from affinesim.error import AffSimContractError, AffSimSingularError, AffSimTheoremViolation
from affinesim.model import BaseValueModel
from affinesim.signature import AffineSignature, ExactScalar, adjoint, compose

from .conversion import NotPauli, pauli_to_signature, recognize_pauli
from .operator import PauliOperator, pauli_single


logger = getLogger(__name__)
logger.addHandler(NullHandler())


class CliffordTableau(BaseValueModel):
    n: int
    x_images: Tuple[PauliOperator, ...]
    z_images: Tuple[PauliOperator, ...]

    @model_validator(mode="after")
    def check_images(self):
        if len(self.x_images) != self.n or len(self.z_images) != self.n:
            raise ValueError(f"Tableau for [{self.n}] qubits requires [{self.n}] images per generator kind")

        for image in self.x_images + self.z_images:
            if image.n != self.n:
                raise ValueError(f"Tableau image [{image.label()}] acts on [{image.n}] qubits instead of [{self.n}]")

            if image.sign_exponent() % 2:
                raise ValueError(f"Tableau image [{image.label()}] does not carry a real sign")

        return self

    def format_lines(self) -> List[str]:
        lines = [f"X{j + 1} -> {image.label()}" for j, image in enumerate(self.x_images)]
        lines.extend(f"Z{j + 1} -> {image.label()}" for j, image in enumerate(self.z_images))

        return lines

    def is_symplectic(self) -> bool:
        return tableau_is_symplectic(self)


def tableau_is_symplectic(tableau: CliffordTableau) -> bool:
    n = tableau.n
    images = list(tableau.x_images) + list(tableau.z_images)

    for image in images:
        if not image.is_hermitian():
            return False

    for a in range(2 * n):
        for b in range(a + 1, 2 * n):
            anticommute = b == a + n
            if images[a].commutes_with(images[b]) == anticommute:
                return False

    return True


def conjugate_by(u: AffineSignature, pauli: PauliOperator) -> AffineSignature:
    """Signature of U P U*"""
    check = check_unitary(u)

    if check.is_singular:
        raise AffSimSingularError(check.reason)

    if check.verdict != UnitaryVerdict.UNITARY:
        raise AffSimContractError(f"Conjugation requires a unitary signature, rescale to [{check}] first")

    if pauli.n * 2 != u.arity:
        raise AffSimContractError(f"Pauli on [{pauli.n}] qubits does not fit signature of arity [{u.arity}]")

    return compose(compose(u, pauli_to_signature(pauli)), adjoint(u))


def _image(u: AffineSignature, generator: PauliOperator) -> PauliOperator:
    result = recognize_pauli(conjugate_by(u, generator))

    if isinstance(result, NotPauli):
        raise AffSimTheoremViolation(f"Image of [{generator.label()}] is not a Pauli operator: {result.reason}")

    image, residual = result

    if residual != ExactScalar.one():
        raise AffSimTheoremViolation(f"Image of [{generator.label()}] carries residual scalar [{residual!r}]")

    if not image.is_hermitian():
        raise AffSimTheoremViolation(f"Image of [{generator.label()}] is not Hermitian: [{image.label()}]")

    return image


def clifford_tableau_of(u: AffineSignature) -> CliffordTableau:
    check = check_unitary(u)

    if check.is_singular:
        raise AffSimSingularError(check.reason)

    u = u.with_scalar(u.scalar.with_p(check.required_p))
    n = u.arity // 2

    x_images = tuple(_image(u, pauli_single("X", j, n)) for j in range(n))
    z_images = tuple(_image(u, pauli_single("Z", j, n)) for j in range(n))

    logger.debug(f"Extracted tableau for [{n}] qubits")

    return CliffordTableau(n=n, x_images=x_images, z_images=z_images)
