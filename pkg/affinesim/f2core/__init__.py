from .bitvec import BitVec, iter_bits, lowest_bit, parity, popcount
from .linalg import AffineSolution, Infeasible, ReducedRows, is_nonsingular, rank, reduce_rows, rref, solve_affine
from .matrix import F2Matrix
