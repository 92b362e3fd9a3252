from typing import List, Optional, Sequence, Tuple

from affinesim.error import AffSimContractError
from affinesim.f2core import F2Matrix, iter_bits, popcount


class QuadraticPhase:
    """
    Q(x) = sum_j diag_j * x_j + 2 * sum_{j<l} cross_jl * x_j * x_l  (mod 4)

    Cross rows are packed integers, symmetric with zero diagonal.
    """

    __slots__ = ("diag", "cross")

    def __init__(self, diag: Sequence[int], cross: Sequence[int]):
        if len(diag) != len(cross):
            raise AffSimContractError(f"Phase diag length [{len(diag)}] does not match cross size [{len(cross)}]")

        k = len(diag)

        for j, row in enumerate(cross):
            if row < 0 or row >> k:
                raise AffSimContractError(f"Cross row [{j}] does not fit into [{k}] variables")

            if (row >> j) & 1:
                raise AffSimContractError(f"Cross matrix has non-zero diagonal entry [{j}]")

            for l in iter_bits(row):
                if not (cross[l] >> j) & 1:
                    raise AffSimContractError(f"Cross matrix is not symmetric at [{j}, {l}]")

        self.diag = tuple(int(v) % 4 for v in diag)
        self.cross = tuple(cross)

    @classmethod
    def zero(cls, k: int):
        return cls((0,) * k, (0,) * k)

    @property
    def arity(self):
        return len(self.diag)

    def cross_matrix(self) -> F2Matrix:
        return F2Matrix(self.arity, self.arity, self.cross)

    def evaluate(self, x: int) -> int:
        return evaluate_phase(self.diag, self.cross, x)

    def conjugate(self) -> "QuadraticPhase":
        return QuadraticPhase([-v for v in self.diag], self.cross)

    def is_zero(self) -> bool:
        return not any(self.diag) and not any(self.cross)

    def __eq__(self, other):
        if not isinstance(other, QuadraticPhase):
            return False

        return self.diag == other.diag and self.cross == other.cross

    def __hash__(self):
        return hash((self.diag, self.cross))

    def __repr__(self):
        pairs = [(j, l) for j in range(self.arity) for l in iter_bits(self.cross[j]) if j < l]
        return f"<QuadraticPhase diag={list(self.diag)} cross={pairs}>"


def evaluate_phase(diag: Sequence[int], cross: Sequence[int], x: int) -> int:
    total = 0

    for j in iter_bits(x):
        total += diag[j] + popcount(cross[j] & x)

    return total % 4


def _toggle_rows(cross: List[int], rows: int, value: int):
    while rows:
        low = rows & -rows
        cross[low.bit_length() - 1] ^= value
        rows ^= low


class PhaseBuffer:
    """
    Mutable quadratic phase used while contracting.

    Diagonal entry j is lo_j + 2 * hi_j (mod 4), both planes are packed integers.
    Linear forms are (mask, const) pairs, their integer lift is sum of masked variables plus const.
    Mutators return the w-exponent picked up by the scalar.
    """

    __slots__ = ("lo", "hi", "cross")

    def __init__(self, diag: Sequence[int] = (), cross: Sequence[int] = ()):
        if len(diag) != len(cross):
            raise AffSimContractError(f"Phase diag length [{len(diag)}] does not match cross size [{len(cross)}]")

        self.lo = 0
        self.hi = 0
        self.cross = list(cross)

        for j, value in enumerate(diag):
            self.set_diag(j, value)

    def __len__(self):
        return len(self.cross)

    def grow(self) -> int:
        self.cross.append(0)
        return len(self.cross) - 1

    def diag_at(self, j: int) -> int:
        return ((self.lo >> j) & 1) | (((self.hi >> j) & 1) << 1)

    def set_diag(self, j: int, value: int):
        bit = 1 << j
        value %= 4

        self.lo = (self.lo & ~bit) | (bit if value & 1 else 0)
        self.hi = (self.hi & ~bit) | (bit if value & 2 else 0)

    def diag_list(self, order: Optional[Sequence[int]] = None) -> List[int]:
        if order is None:
            order = range(len(self.cross))

        return [self.diag_at(j) for j in order]

    def add_diag(self, mask: int, a: int):
        """Add a (mod 4) to every diagonal entry in mask"""
        if a & 1:
            self.hi ^= self.lo & mask
            self.lo ^= mask

        if a & 2:
            self.hi ^= mask

    def add_square(self, mask: int, const: int, a: int) -> int:
        """Add a * (mask.x + const)^2 to the phase"""
        a %= 4

        if not a:
            return 0

        self.add_diag(mask, a * (1 + 2 * const) % 4)

        if a & 1:
            rows = mask

            while rows:
                low = rows & -rows
                self.cross[low.bit_length() - 1] ^= mask ^ low
                rows ^= low

        return 2 * a * const

    def add_product(self, m1: int, k1: int, m2: int, k2: int) -> int:
        """Add 2 * (m1.x + k1) * (m2.x + k2) to the phase"""
        twos = m1 & m2

        if k2:
            twos ^= m1

        if k1:
            twos ^= m2

        self.hi ^= twos

        _toggle_rows(self.cross, m1, m2)
        _toggle_rows(self.cross, m2, m1)

        return 4 * (k1 & k2)

    def clear(self, d: int) -> Tuple[int, int]:
        """Drop every term with x_d, return its diagonal entry and cross row"""
        bit = 1 << d
        c = self.diag_at(d)
        row = self.cross[d]

        self.lo &= ~bit
        self.hi &= ~bit
        self.cross[d] = 0

        _toggle_rows(self.cross, row, bit)

        return c, row

    def substitute(self, d: int, mask: int, const: int) -> int:
        """Replace x_d by (mask.x + const), mask must not contain d"""
        c, row = self.clear(d)

        q = self.add_square(mask, const, c)
        q += self.add_product(mask, const, row, 0)

        return q
