import numpy as np

from affinesim.f2core import BitVec, F2Matrix, Infeasible, is_nonsingular, rank, rref, solve_affine
from affinesim.validator.abc_validator import AbstractValidator


class F2CoreValidator(AbstractValidator):
    def validate_trial(self, name: str, rng: np.random.Generator):
        rows = int(rng.integers(1, 9))
        cols = int(rng.integers(1, 9))

        m = F2Matrix.from_lists(rng.integers(2, size=(rows, cols)).tolist(), cols)
        b = BitVec.from_bits(int(v) for v in rng.integers(2, size=rows))

        reduced, pivots, r = rref(m)

        if r != rank(m) or r != rank(m.transpose()):
            raise ValueError(f"Row rank [{r}] disagrees with rank of [{m!r}] or its transpose")

        for i, (row, col) in enumerate(pivots):
            if reduced.get(row, col) != 1 or sum(reduced.get(j, col) for j in range(rows)) != 1:
                raise ValueError(f"Pivot [{i}] at column [{col}] is not a unit column of the reduced matrix")

        solution = solve_affine(m, b)

        if isinstance(solution, Infeasible):
            if r == rows:
                raise ValueError("Full row rank system reported as infeasible")
        else:
            if m.mul_vec(solution.particular) != b:
                raise ValueError("Particular solution does not satisfy the system")

            if len(solution.kernel_basis) != cols - r:
                raise ValueError(f"Kernel dimension [{len(solution.kernel_basis)}] differs from [{cols - r}]")

            for vec in solution.kernel_basis:
                if not m.mul_vec(vec).is_zero():
                    raise ValueError(f"Kernel vector [{vec}] is not in the null space")

        square = F2Matrix.from_lists(rng.integers(2, size=(rows, rows)).tolist(), rows)

        if is_nonsingular(square) != (rank(square) == rows):
            raise ValueError("Nonsingularity verdict disagrees with rank")
