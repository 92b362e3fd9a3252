from typing import List, NamedTuple, Optional, Sequence, Tuple

from affinesim.error import AffSimContractError
from affinesim.f2core.bitvec import BitVec
from affinesim.f2core.matrix import F2Matrix


class Infeasible:
    """Verdict of an inconsistent affine system, falsy"""

    def __init__(self, reason: str = "inconsistent system"):
        self.reason = reason

    def __bool__(self):
        return False

    def __repr__(self):
        return f"<Infeasible: {self.reason}>"


class AffineSolution(NamedTuple):
    particular: BitVec
    kernel_basis: List[BitVec]


class ReducedRows(NamedTuple):
    rows: List[Tuple[int, int, int]]
    consistent: bool


def reduce_rows(masks: Sequence[int], rhs: Sequence[int], pivot_order: Sequence[int]) -> ReducedRows:
    """
    Fully reduced row echelon form of the augmented system (masks | rhs).
    Pivot columns are picked greedily in pivot_order, every result row is (pivot, mask, rhs).
    Zero rows are dropped, a zero row with rhs 1 marks the system as inconsistent.
    """
    work = [[m, b & 1] for m, b in zip(masks, rhs)]
    done: List[List[int]] = []
    pivots: List[int] = []

    for col in pivot_order:
        bit = 1 << col
        found = None

        for i, row in enumerate(work):
            if row[0] & bit:
                found = i
                break

        if found is None:
            continue

        pivot_row = work.pop(found)

        for row in work:
            if row[0] & bit:
                row[0] ^= pivot_row[0]
                row[1] ^= pivot_row[1]

        for row in done:
            if row[0] & bit:
                row[0] ^= pivot_row[0]
                row[1] ^= pivot_row[1]

        done.append(pivot_row)
        pivots.append(col)

        if not work:
            break

    consistent = all(row[0] or not row[1] for row in work)

    return ReducedRows([(p, row[0], row[1]) for p, row in zip(pivots, done)], consistent)


def _check_pivot_order(cols: int, pivot_order: Optional[Sequence[int]]) -> Sequence[int]:
    if pivot_order is None:
        return range(cols)

    if sorted(pivot_order) != list(range(cols)):
        raise AffSimContractError(f"Pivot order [{list(pivot_order)}] is not a permutation of [{cols}] columns")

    return pivot_order


def rref(m: F2Matrix, pivot_order: Optional[Sequence[int]] = None) -> Tuple[F2Matrix, List[Tuple[int, int]], int]:
    pivot_order = _check_pivot_order(m.cols, pivot_order)
    reduced = reduce_rows(m.data, [0] * m.rows, pivot_order)

    data = [mask for _, mask, _ in reduced.rows]
    data.extend([0] * (m.rows - len(data)))

    pivots = [(i, col) for i, (col, _, _) in enumerate(reduced.rows)]

    return F2Matrix(m.rows, m.cols, data), pivots, len(reduced.rows)


def rank(m: F2Matrix) -> int:
    return len(reduce_rows(m.data, [0] * m.rows, range(m.cols)).rows)


def solve_affine(a: F2Matrix, b: BitVec):
    if a.rows != b.len:
        raise AffSimContractError(f"Right-hand side length [{b.len}] does not match row count [{a.rows}]")

    reduced = reduce_rows(a.data, list(b), range(a.cols))

    if not reduced.consistent:
        return Infeasible(f"rank of augmented system exceeds rank [{len(reduced.rows)}] of the matrix")

    particular = 0
    pivot_mask = 0

    for col, _, rhs in reduced.rows:
        particular |= rhs << col
        pivot_mask |= 1 << col

    kernel_basis = []

    for free_col in range(a.cols):
        if pivot_mask & (1 << free_col):
            continue

        vec = 1 << free_col

        for col, mask, _ in reduced.rows:
            if mask & (1 << free_col):
                vec |= 1 << col

        kernel_basis.append(BitVec(a.cols, vec))

    return AffineSolution(BitVec(a.cols, particular), kernel_basis)


def is_nonsingular(m: F2Matrix) -> bool:
    if not m.is_square():
        raise AffSimContractError(f"Matrix [{m.rows}x{m.cols}] is not square")

    return rank(m) == m.rows
