from enum import Enum
from logging import getLogger, NullHandler
from typing import Optional

from affinesim.error import AffSimContractError, AffSimSingularError
from affinesim.f2core import is_nonsingular
from affinesim.model import BaseValueModel
from affinesim.signature import AffineSignature

from .form import cf_matrix, extract_form


logger = getLogger(__name__)
logger.addHandler(NullHandler())


class UnitaryVerdict(str, Enum):
    SINGULAR = "singular"
    UNITARY = "unitary"
    UNITARY_AFTER_SCALING = "unitary-after-scaling"


class UnitaryCheck(BaseValueModel):
    verdict: UnitaryVerdict
    required_p: Optional[int] = None
    reason: Optional[str] = None

    @property
    def is_singular(self) -> bool:
        return self.verdict == UnitaryVerdict.SINGULAR

    def __str__(self):
        if self.verdict == UnitaryVerdict.UNITARY_AFTER_SCALING:
            return f"{self.verdict.value} p={self.required_p}"

        return self.verdict.value


def check_unitary(f: AffineSignature) -> UnitaryCheck:
    if f.arity % 2:
        raise AffSimContractError(f"Signature arity [{f.arity}] must be even")

    try:
        form = extract_form(f)
    except AffSimSingularError as e:
        logger.debug(f"Canonical form extraction failed: {e.reason}")
        return UnitaryCheck(verdict=UnitaryVerdict.SINGULAR, reason=e.reason)

    if not is_nonsingular(cf_matrix(form)):
        return UnitaryCheck(verdict=UnitaryVerdict.SINGULAR, reason="matrix [A; C3] is singular over F2")

    if f.scalar.p == -form.r:
        return UnitaryCheck(verdict=UnitaryVerdict.UNITARY, required_p=-form.r)

    return UnitaryCheck(verdict=UnitaryVerdict.UNITARY_AFTER_SCALING, required_p=-form.r)


def unitarize(f: AffineSignature) -> AffineSignature:
    check = check_unitary(f)

    if check.is_singular:
        raise AffSimSingularError(check.reason)

    return f.with_scalar(f.scalar.with_p(check.required_p))
