from abc import ABC
from pydantic import BaseModel, ConfigDict


class BaseModelWithConfig(BaseModel, ABC):
    """Mutable model, used for settings"""

    model_config = ConfigDict(
        allow_inf_nan=False,
        arbitrary_types_allowed=True,
        extra="forbid",
        validate_assignment=True,
    )


class BaseValueModel(BaseModel, ABC):
    """Immutable value model, used for circuits, Pauli operators and verdicts"""

    model_config = ConfigDict(
        allow_inf_nan=False,
        arbitrary_types_allowed=True,
        extra="forbid",
        frozen=True,
    )
