from pydantic import field_validator, model_validator
from re import compile

from affinesim.error import AffSimContractError
from affinesim.f2core import BitVec
from affinesim.model import BaseValueModel


_SIGN_PREFIX = {0: "+", 1: "+i", 2: "-", 3: "-i"}
_LABEL_RE = compile(r"^([+-]?)(i?)([IXYZ]*)$")


class PauliOperator(BaseValueModel):
    """
    P(x, y) = i^c * (-1)^(r.x) when x + y = e over F2, zero otherwise.
    x indexes rows, y indexes columns, bit j of e and r belongs to qubit j.
    """

    n: int
    e: BitVec
    r: BitVec
    c: int = 0

    @field_validator("c")
    @classmethod
    def normalise_c(cls, value: int):
        return value % 4

    @model_validator(mode="after")
    def check_lengths(self):
        if self.e.len != self.n or self.r.len != self.n:
            raise ValueError(f"Pauli vectors of length [{self.e.len}, {self.r.len}] do not match [{self.n}] qubits")

        return self

    @classmethod
    def identity(cls, n: int):
        return cls(n=n, e=BitVec.zeros(n), r=BitVec.zeros(n), c=0)

    def y_count(self) -> int:
        return (self.e & self.r).popcount()

    def sign_exponent(self) -> int:
        """k such that the operator is i^k times the tensor product of its letters"""
        return (self.c - 3 * self.y_count()) % 4

    def letters(self) -> str:
        return "".join("IXZY"[self.e[j] | (self.r[j] << 1)] for j in range(self.n))

    def label(self) -> str:
        return _SIGN_PREFIX[self.sign_exponent()] + self.letters()

    def is_hermitian(self) -> bool:
        return self.c % 2 == self.r.dot(self.e)

    def commutes_with(self, other: "PauliOperator") -> bool:
        _check_same_size(self, other)
        return (self.e.dot(other.r) ^ other.e.dot(self.r)) == 0

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        return pauli_mul(self, other)

    def __str__(self):
        return self.label()


def _check_same_size(p1: PauliOperator, p2: PauliOperator):
    if p1.n != p2.n:
        raise AffSimContractError(f"Pauli size mismatch [{p1.n}] vs [{p2.n}]")


def pauli_single(kind: str, j: int, n: int) -> PauliOperator:
    if not 0 <= j < n:
        raise AffSimContractError(f"Qubit index [{j}] is out of range for [{n}] qubits")

    kind = kind.upper()

    if kind == "I":
        return PauliOperator.identity(n)

    if kind == "X":
        return PauliOperator(n=n, e=BitVec.unit(n, j), r=BitVec.zeros(n), c=0)

    if kind == "Z":
        return PauliOperator(n=n, e=BitVec.zeros(n), r=BitVec.unit(n, j), c=0)

    if kind == "Y":
        return PauliOperator(n=n, e=BitVec.unit(n, j), r=BitVec.unit(n, j), c=3)

    raise AffSimContractError(f"Unknown Pauli kind [{kind}]")


def pauli_mul(p1: PauliOperator, p2: PauliOperator) -> PauliOperator:
    _check_same_size(p1, p2)

    return PauliOperator(
        n=p1.n,
        e=p1.e ^ p2.e,
        r=p1.r ^ p2.r,
        c=p1.c + p2.c + 2 * p2.r.dot(p1.e),
    )


def pauli_from_label(label: str) -> PauliOperator:
    """Parse labels like XZ, -YI or +iZ, qubit 0 first"""
    m = _LABEL_RE.match(label.strip())

    if not m:
        raise AffSimContractError(f"Invalid Pauli label [{label}]")

    sign, imaginary, letters = m.groups()
    n = len(letters)

    e = BitVec.from_bits(1 if ch in "XY" else 0 for ch in letters)
    r = BitVec.from_bits(1 if ch in "ZY" else 0 for ch in letters)

    k = (2 if sign == "-" else 0) + (1 if imaginary else 0)

    return PauliOperator(n=n, e=e, r=r, c=k + 3 * letters.count("Y"))
