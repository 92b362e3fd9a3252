from typing import Iterable, Iterator

from affinesim.error import AffSimContractError


def popcount(x: int) -> int:
    return bin(x).count("1")


def parity(x: int) -> int:
    return bin(x).count("1") & 1


def lowest_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class BitVec:
    """
    Vector over F2 packed into a single Python integer, element i is bit i.
    Textual form lists element 0 first.
    """

    __slots__ = ("len", "bits")

    def __init__(self, length: int, bits: int = 0):
        if length < 0:
            raise AffSimContractError(f"BitVec length [{length}] must not be negative")

        if bits < 0 or bits >> length:
            raise AffSimContractError(f"Bits [{bits:b}] do not fit into BitVec of length [{length}]")

        self.len = length
        self.bits = bits

    @classmethod
    def zeros(cls, length: int):
        return cls(length, 0)

    @classmethod
    def unit(cls, length: int, i: int):
        if not 0 <= i < length:
            raise AffSimContractError(f"Index [{i}] is out of range for BitVec of length [{length}]")

        return cls(length, 1 << i)

    @classmethod
    def from_bits(cls, values: Iterable[int]):
        bits = 0
        length = 0

        for i, v in enumerate(values):
            if v not in (0, 1):
                raise AffSimContractError(f"Value [{v}] is not a bit")

            bits |= v << i
            length = i + 1

        return cls(length, bits)

    @classmethod
    def from_string(cls, text: str):
        if any(ch not in "01" for ch in text):
            raise AffSimContractError(f"Bit string [{text}] may contain only [0] and [1]")

        return cls.from_bits(int(ch) for ch in text)

    def __len__(self):
        return self.len

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.len:
            raise IndexError(f"Index [{i}] is out of range for BitVec of length [{self.len}]")

        return (self.bits >> i) & 1

    def __iter__(self):
        for i in range(self.len):
            yield (self.bits >> i) & 1

    def _check_same_length(self, other: "BitVec"):
        if self.len != other.len:
            raise AffSimContractError(f"BitVec length mismatch [{self.len}] vs [{other.len}]")

    def __xor__(self, other: "BitVec"):
        self._check_same_length(other)
        return BitVec(self.len, self.bits ^ other.bits)

    def __and__(self, other: "BitVec"):
        self._check_same_length(other)
        return BitVec(self.len, self.bits & other.bits)

    def __or__(self, other: "BitVec"):
        self._check_same_length(other)
        return BitVec(self.len, self.bits | other.bits)

    def dot(self, other: "BitVec") -> int:
        self._check_same_length(other)
        return parity(self.bits & other.bits)

    def popcount(self) -> int:
        return popcount(self.bits)

    def is_zero(self) -> bool:
        return self.bits == 0

    def to_string(self) -> str:
        return "".join(str((self.bits >> i) & 1) for i in range(self.len))

    def __eq__(self, other):
        if not isinstance(other, BitVec):
            return False

        return self.len == other.len and self.bits == other.bits

    def __hash__(self):
        return hash((self.len, self.bits))

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"<BitVec '{self.to_string()}'>"
