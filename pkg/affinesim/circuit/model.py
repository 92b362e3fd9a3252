from enum import Enum
from pydantic import Field, model_validator
from typing import Tuple

from affinesim.error import AffSimContractError
from affinesim.model import BaseValueModel


class GateKind(Enum):
    H = {
        "keyword": "h",
        "arity": 1,
    }

    P = {
        "keyword": "p",
        "arity": 1,
    }

    CNOT = {
        "keyword": "cnot",
        "arity": 2,
    }

    # Macros, expanded into H, P and CNOT before lowering
    X = {
        "keyword": "x",
        "arity": 1,
        "is_macro": True,
    }

    Y = {
        "keyword": "y",
        "arity": 1,
        "is_macro": True,
    }

    Z = {
        "keyword": "z",
        "arity": 1,
        "is_macro": True,
    }

    CZ = {
        "keyword": "cz",
        "arity": 2,
        "is_macro": True,
    }

    @property
    def keyword(self) -> str:
        return self.value["keyword"]

    @property
    def arity(self) -> int:
        return self.value["arity"]

    @property
    def is_macro(self) -> bool:
        return self.value.get("is_macro", False)

    @classmethod
    def from_keyword(cls, keyword: str) -> "GateKind":
        for kind in cls:
            if kind.keyword == keyword.lower():
                return kind

        raise AffSimContractError(f"Unknown gate [{keyword}]")

    def __repr__(self):
        return f"<{self.__class__.__name__}.{super().name}>"


class Gate(BaseValueModel):
    kind: GateKind
    qubits: Tuple[int, ...]

    @model_validator(mode="after")
    def check_operands(self):
        if len(self.qubits) != self.kind.arity:
            raise ValueError(f"Gate [{self.kind.keyword}] requires [{self.kind.arity}] operand(s), got [{len(self.qubits)}]")

        if any(q < 0 for q in self.qubits):
            raise ValueError(f"Negative qubit index in {list(self.qubits)}")

        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"Gate [{self.kind.keyword}] has duplicate operands {list(self.qubits)}")

        return self

    @classmethod
    def make(cls, kind: GateKind, *qubits: int) -> "Gate":
        return cls(kind=kind, qubits=tuple(qubits))

    def __str__(self):
        return " ".join([self.kind.keyword] + [str(q) for q in self.qubits])


class Circuit(BaseValueModel):
    n_qubits: int = Field(ge=0)
    gates: Tuple[Gate, ...] = ()

    @model_validator(mode="after")
    def check_qubit_range(self):
        for gate in self.gates:
            for q in gate.qubits:
                if q >= self.n_qubits:
                    raise ValueError(f"Qubit index [{q}] is out of range for [{self.n_qubits}] qubits")

        return self

    def __len__(self):
        return len(self.gates)
