from typing import List, Optional, Sequence

from affinesim.error import AffSimContractError
from affinesim.f2core.bitvec import BitVec, parity


class F2Matrix:
    """
    Row-major matrix over F2, every row is a packed integer with column j at bit j.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Optional[Sequence[int]] = None):
        if rows < 0 or cols < 0:
            raise AffSimContractError(f"Matrix shape [{rows}x{cols}] must not be negative")

        if data is None:
            data = (0,) * rows

        data = tuple(data)

        if len(data) != rows:
            raise AffSimContractError(f"Matrix declares [{rows}] rows, but [{len(data)}] rows were provided")

        for row in data:
            if row < 0 or row >> cols:
                raise AffSimContractError(f"Row [{row:b}] does not fit into [{cols}] columns")

        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def zeros(cls, rows: int, cols: int):
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int):
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_bitvecs(cls, vectors: Sequence[BitVec], cols: Optional[int] = None):
        if cols is None:
            if not vectors:
                raise AffSimContractError("Column count is required for a matrix without rows")

            cols = vectors[0].len

        for v in vectors:
            if v.len != cols:
                raise AffSimContractError(f"Row length [{v.len}] does not match column count [{cols}]")

        return cls(len(vectors), cols, [v.bits for v in vectors])

    @classmethod
    def from_lists(cls, values: Sequence[Sequence[int]], cols: Optional[int] = None):
        return cls.from_bitvecs([BitVec.from_bits(row) for row in values], cols)

    def row(self, i: int) -> BitVec:
        return BitVec(self.cols, self.data[i])

    def get(self, i: int, j: int) -> int:
        return (self.data[i] >> j) & 1

    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "F2Matrix":
        res: List[int] = [0] * self.cols

        for i, row in enumerate(self.data):
            for j in range(self.cols):
                if (row >> j) & 1:
                    res[j] |= 1 << i

        return F2Matrix(self.cols, self.rows, res)

    def vstack(self, other: "F2Matrix") -> "F2Matrix":
        if self.cols != other.cols:
            raise AffSimContractError(f"Cannot stack matrices with [{self.cols}] and [{other.cols}] columns")

        return F2Matrix(self.rows + other.rows, self.cols, self.data + other.data)

    def mul_vec(self, v: BitVec) -> BitVec:
        if v.len != self.cols:
            raise AffSimContractError(f"Vector length [{v.len}] does not match column count [{self.cols}]")

        return BitVec(self.rows, sum(parity(row & v.bits) << i for i, row in enumerate(self.data)))

    def to_lists(self) -> List[List[int]]:
        return [[(row >> j) & 1 for j in range(self.cols)] for row in self.data]

    def __eq__(self, other):
        if not isinstance(other, F2Matrix):
            return False

        return self.rows == other.rows and self.cols == other.cols and self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __str__(self):
        return "\n".join("".join(str(bit) for bit in row) for row in self.to_lists())

    def __repr__(self):
        return f"<F2Matrix {self.rows}x{self.cols} {[self.row(i).to_string() for i in range(self.rows)]}>"
