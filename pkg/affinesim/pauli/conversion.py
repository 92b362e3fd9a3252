from typing import Tuple, Union

from affinesim.error import AffSimContractError
from affinesim.f2core import BitVec
from affinesim.signature import AffineSignature, ExactScalar, canonical_signature, repivot

from .operator import PauliOperator


class NotPauli:
    """Verdict of a signature that is not a multiple of a Pauli operator, falsy"""

    def __init__(self, reason: str):
        self.reason = reason

    def __bool__(self):
        return False

    def __repr__(self):
        return f"<NotPauli: {self.reason}>"


def pauli_to_signature(pauli: PauliOperator) -> AffineSignature:
    n = pauli.n
    k = 2 * n

    rows = [((1 << j) | (1 << (k - 1 - j)), pauli.e[j]) for j in range(n)]
    diag = [2 * pauli.r[j] for j in range(n)] + [0] * n

    return canonical_signature(k, ExactScalar(0, 2 * pauli.c), rows, diag, [0] * k)


def recognize_pauli(f: AffineSignature) -> Union[Tuple[PauliOperator, ExactScalar], NotPauli]:
    """
    Match f against scalar * (Pauli signature), return the operator and the leftover scalar.
    The scalar 2^(p/2) * w^q is split as i^c * 2^(p/2) * w^(q mod 2).
    """
    if f.arity % 2:
        raise AffSimContractError(f"Signature arity [{f.arity}] must be even")

    if f.is_zero:
        return NotPauli("zero signature")

    n = f.arity // 2
    k = f.arity

    rep = repivot(f, [k - 1 - j for j in range(n)] + list(range(n)))

    if len(rep.rows) != n:
        return NotPauli(f"support has [{len(rep.rows)}] constraints instead of [{n}]")

    e = 0

    for pivot, mask, rhs in rep.rows:
        qubit = k - 1 - pivot

        if pivot < n or mask != (1 << pivot) | (1 << qubit):
            return NotPauli(f"support constraint [{BitVec(k, mask)}] is not of the form y = x + e")

        e |= rhs << qubit

    r = 0

    for j in range(n):
        if rep.cross[j]:
            return NotPauli(f"cross term present on variable [{j}]")

        if rep.diag[j] % 2:
            return NotPauli(f"odd diagonal entry on variable [{j}]")

        r |= (rep.diag[j] // 2) << j

    pauli = PauliOperator(n=n, e=BitVec(n, e), r=BitVec(n, r), c=rep.scalar.q // 2)
    residual = ExactScalar(rep.scalar.p, rep.scalar.q % 2)

    return pauli, residual
