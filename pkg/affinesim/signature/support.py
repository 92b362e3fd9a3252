from typing import Iterator, Sequence, Tuple

from affinesim.error import AffSimContractError
from affinesim.f2core import BitVec, F2Matrix, parity


class AffineSupport:
    """
    Support {x : A x = b} kept in fully reduced row echelon form, one pivot column per row.
    An infeasible system is never stored.
    """

    __slots__ = ("arity", "matrix", "rhs", "pivots")

    def __init__(self, arity: int, rows: Sequence[Tuple[int, int, int]] = ()):
        pivots = []
        masks = []
        rhs = []

        for pivot, mask, b in rows:
            if not (mask >> pivot) & 1:
                raise AffSimContractError(f"Support row [{mask:b}] does not contain its pivot [{pivot}]")

            pivots.append(pivot)
            masks.append(mask)
            rhs.append(b & 1)

        self.arity = arity
        self.matrix = F2Matrix(len(masks), arity, masks)
        self.rhs = BitVec.from_bits(rhs)
        self.pivots = tuple(pivots)

    @classmethod
    def full(cls, arity: int):
        return cls(arity)

    def rows(self) -> Iterator[Tuple[int, int, int]]:
        for i, pivot in enumerate(self.pivots):
            yield pivot, self.matrix.data[i], self.rhs[i]

    @property
    def rank(self):
        return len(self.pivots)

    @property
    def dimension(self):
        return self.arity - len(self.pivots)

    @property
    def pivot_mask(self):
        return sum(1 << p for p in self.pivots)

    @property
    def free_mask(self):
        return ((1 << self.arity) - 1) ^ self.pivot_mask

    def contains(self, x: int) -> bool:
        return all(parity(mask & x) == b for _, mask, b in self.rows())

    def __eq__(self, other):
        if not isinstance(other, AffineSupport):
            return False

        return self.arity == other.arity and self.matrix == other.matrix and self.rhs == other.rhs

    def __hash__(self):
        return hash((self.arity, self.matrix, self.rhs))

    def __repr__(self):
        rows = [f"{BitVec(self.arity, mask).to_string()}={b}" for _, mask, b in self.rows()]
        return f"<AffineSupport arity={self.arity} rows={rows}>"
