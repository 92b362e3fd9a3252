import numpy as np

from affinesim.canonical import UnitaryVerdict, check_unitary
from affinesim.signature import close_under_compose, h_signature, p_signature
from affinesim.validator.abc_validator import AbstractValidator


ONE_QUBIT_CLIFFORD_COUNT = 24


class CliffordGroupValidator(AbstractValidator):
    """Closing H and P under compose gives the 24 one-qubit Clifford classes"""

    def get_trials(self):
        return [f"{self.__class__.__name__}_0000"]

    def validate_trial(self, name: str, rng: np.random.Generator):
        elements = close_under_compose([h_signature(), p_signature()])

        if len(elements) != ONE_QUBIT_CLIFFORD_COUNT:
            raise ValueError(f"Closure has [{len(elements)}] elements instead of [{ONE_QUBIT_CLIFFORD_COUNT}]")

        for f in elements:
            if check_unitary(f).verdict != UnitaryVerdict.UNITARY:
                raise ValueError(f"Group element [{f!r}] is not recognized as unitary")
