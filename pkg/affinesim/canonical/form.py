from typing import List

from affinesim.error import AffSimContractError, AffSimSingularError
from affinesim.f2core import BitVec, F2Matrix, iter_bits
from affinesim.model import BaseValueModel
from affinesim.signature import AffineSignature, ExactScalar, QuadraticPhase, canonical_signature, repivot


class NonsingularForm(BaseValueModel):
    """
    Support y'' = A x + B y' + b and phase x.C1.x + y'.C2.y' + 2 y'.C3.x for an arity 2n signature.

    x_k is the row-index bit of qubit k (variable k), y_k is the column-index bit of qubit k (variable 2n-1-k).
    out_perm lists free output qubits y' first, then dependent output qubits y''.
    """

    n: int
    r: int
    out_perm: List[int]
    A: F2Matrix
    B: F2Matrix
    b: BitVec
    C1: QuadraticPhase
    C2: QuadraticPhase
    C3: F2Matrix
    scalar: ExactScalar

    @property
    def free_outputs(self) -> List[int]:
        return self.out_perm[: self.r]

    @property
    def dependent_outputs(self) -> List[int]:
        return self.out_perm[self.r :]

    def to_signature(self) -> AffineSignature:
        n = self.n
        k = 2 * n

        def y_var(qubit: int) -> int:
            return k - 1 - qubit

        free = self.free_outputs

        rows = []

        for i, qubit in enumerate(self.dependent_outputs):
            mask = (1 << y_var(qubit)) | self.A.data[i]

            for t in iter_bits(self.B.data[i]):
                mask |= 1 << y_var(free[t])

            rows.append((mask, self.b[i]))

        diag = [0] * k
        cross = [0] * k

        for j in range(n):
            diag[j] = self.C1.diag[j]
            cross[j] = self.C1.cross[j]

        for t, qubit in enumerate(free):
            v = y_var(qubit)
            diag[v] = self.C2.diag[t]

            for u in iter_bits(self.C2.cross[t]):
                cross[v] |= 1 << y_var(free[u])

            cross[v] |= self.C3.data[t]

            for j in iter_bits(self.C3.data[t]):
                cross[j] |= 1 << v

        return canonical_signature(k, self.scalar, rows, diag, cross)


def extract_form(f: AffineSignature) -> NonsingularForm:
    if f.arity % 2:
        raise AffSimContractError(f"Signature arity [{f.arity}] must be even")

    if f.is_zero:
        raise AffSimSingularError("zero signature")

    n = f.arity // 2
    k = f.arity

    y_vars = [k - 1 - qubit for qubit in range(n)]
    x_mask = (1 << n) - 1

    rep = repivot(f, y_vars + list(range(n)))

    dependent = []

    for pivot, mask, rhs in rep.rows:
        if pivot < n:
            raise AffSimSingularError(f"support constraint [{BitVec(k, mask)}] involves only row variables")

        if not mask & x_mask:
            raise AffSimSingularError(f"support constraint [{BitVec(k, mask)}] involves only column variables")

        dependent.append((k - 1 - pivot, mask, rhs))

    dependent_qubits = [qubit for qubit, _, _ in dependent]
    free_qubits = [qubit for qubit in range(n) if qubit not in dependent_qubits]
    free_position = {y_vars[qubit]: t for t, qubit in enumerate(free_qubits)}

    r = len(free_qubits)

    if k - len(rep.rows) != n + r:
        raise AffSimSingularError(f"support dimension [{k - len(rep.rows)}] differs from [{n + r}]")

    def free_y_bits(mask: int) -> int:
        return sum(1 << free_position[v] for v in iter_bits(mask) if v in free_position)

    a_rows = [mask & x_mask for _, mask, _ in dependent]
    b_rows = [free_y_bits(mask) for _, mask, _ in dependent]
    b_bits = [rhs for _, _, rhs in dependent]

    c1 = QuadraticPhase(rep.diag[:n], [rep.cross[j] & x_mask for j in range(n)])
    c2 = QuadraticPhase(
        [rep.diag[y_vars[qubit]] for qubit in free_qubits],
        [free_y_bits(rep.cross[y_vars[qubit]]) for qubit in free_qubits],
    )
    c3 = F2Matrix(r, n, [rep.cross[y_vars[qubit]] & x_mask for qubit in free_qubits])

    return NonsingularForm(
        n=n,
        r=r,
        out_perm=free_qubits + dependent_qubits,
        A=F2Matrix(n - r, n, a_rows),
        B=F2Matrix(n - r, r, b_rows),
        b=BitVec.from_bits(b_bits),
        C1=c1,
        C2=c2,
        C3=c3,
        scalar=rep.scalar,
    )


def cf_matrix(form: NonsingularForm) -> F2Matrix:
    return form.A.vstack(form.C3)
