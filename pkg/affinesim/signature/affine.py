from typing import List, NamedTuple, Sequence, Tuple

from affinesim.error import AffSimContractError, AffSimInvariantViolation
from affinesim.f2core import BitVec, iter_bits, lowest_bit, reduce_rows
from affinesim.signature.phase import PhaseBuffer, QuadraticPhase, evaluate_phase
from affinesim.signature.scalar import ExactScalar
from affinesim.signature.support import AffineSupport


class AffineSignature:
    """
    scalar * chi_{A x = b} * i^{Q(x)} over arity Boolean variables.

    The phase never mentions a pivot variable of the support,
    the zero function is a zero scalar with full support and zero phase.
    """

    __slots__ = ("arity", "scalar", "support", "phase")

    def __init__(self, arity: int, scalar: ExactScalar, support: AffineSupport, phase: QuadraticPhase):
        if support.arity != arity or phase.arity != arity:
            raise AffSimContractError(
                f"Arity mismatch: signature [{arity}], support [{support.arity}], phase [{phase.arity}]"
            )

        self.arity = arity
        self.scalar = scalar
        self.support = support
        self.phase = phase

    @classmethod
    def zero(cls, arity: int):
        return cls(arity, ExactScalar.zero(), AffineSupport.full(arity), QuadraticPhase.zero(arity))

    @property
    def is_zero(self) -> bool:
        return self.scalar.is_zero

    def evaluate(self, x: BitVec) -> ExactScalar:
        if x.len != self.arity:
            raise AffSimContractError(f"Input length [{x.len}] does not match signature arity [{self.arity}]")

        return self.evaluate_bits(x.bits)

    def evaluate_bits(self, x: int) -> ExactScalar:
        if self.scalar.is_zero or not self.support.contains(x):
            return ExactScalar.zero()

        return self.scalar * ExactScalar.i_power(evaluate_phase(self.phase.diag, self.phase.cross, x))

    def scale(self, factor: ExactScalar) -> "AffineSignature":
        if factor.is_zero:
            return AffineSignature.zero(self.arity)

        return AffineSignature(self.arity, self.scalar * factor, self.support, self.phase)

    def with_scalar(self, scalar: ExactScalar) -> "AffineSignature":
        if self.is_zero or scalar.is_zero:
            return AffineSignature.zero(self.arity)

        return AffineSignature(self.arity, scalar, self.support, self.phase)

    def total(self) -> ExactScalar:
        """Sum over all inputs, the value of the closed network holding only this signature"""
        from affinesim.signature.operations import total

        return total(self)

    def check_invariants(self):
        if self.scalar.is_zero:
            if self.support.rank or not self.phase.is_zero():
                raise AffSimInvariantViolation("Zero signature must have full support and zero phase")

            return

        if not 0 <= self.scalar.q < 8:
            raise AffSimInvariantViolation(f"Scalar exponent q [{self.scalar.q}] is not reduced mod 8")

        previous = -1
        pivot_mask = self.support.pivot_mask

        for pivot, mask, _ in self.support.rows():
            if pivot <= previous:
                raise AffSimInvariantViolation(f"Support pivots are not increasing at [{pivot}]")

            if lowest_bit(mask) != pivot:
                raise AffSimInvariantViolation(f"Pivot [{pivot}] is not the leading column of its row")

            if mask & pivot_mask != 1 << pivot:
                raise AffSimInvariantViolation(f"Support row with pivot [{pivot}] mentions another pivot")

            if self.phase.diag[pivot] or self.phase.cross[pivot]:
                raise AffSimInvariantViolation(f"Phase mentions pivot variable [{pivot}]")

            previous = pivot

        for j, row in enumerate(self.phase.cross):
            if (row >> j) & 1:
                raise AffSimInvariantViolation(f"Cross matrix has non-zero diagonal entry [{j}]")

            for l in iter_bits(row):
                if not (self.phase.cross[l] >> j) & 1:
                    raise AffSimInvariantViolation(f"Cross matrix is not symmetric at [{j}, {l}]")

    def __eq__(self, other):
        if not isinstance(other, AffineSignature):
            return False

        return (
            self.arity == other.arity
            and self.scalar == other.scalar
            and self.support == other.support
            and self.phase == other.phase
        )

    def __hash__(self):
        return hash((self.arity, self.scalar, self.support, self.phase))

    def __repr__(self):
        return f"<AffineSignature arity={self.arity} scalar={self.scalar!r} support={self.support!r} phase={self.phase!r}>"


def canonical_signature(
    arity: int,
    scalar: ExactScalar,
    rows: Sequence[Tuple[int, int]],
    diag: Sequence[int],
    cross: Sequence[int],
) -> AffineSignature:
    """
    Build a canonical signature from arbitrary (mask, rhs) constraints and an arbitrary phase.
    Pivots are chosen left to right, then substituted out of the phase.
    """
    if scalar.is_zero:
        return AffineSignature.zero(arity)

    reduced = reduce_rows([m for m, _ in rows], [b for _, b in rows], range(arity))

    if not reduced.consistent:
        return AffineSignature.zero(arity)

    buffer = PhaseBuffer(diag, cross)
    q = 0

    for pivot, mask, b in reduced.rows:
        q += buffer.substitute(pivot, mask ^ (1 << pivot), b)

    return AffineSignature(
        arity,
        scalar * ExactScalar(0, q),
        AffineSupport(arity, reduced.rows),
        QuadraticPhase(buffer.diag_list(), buffer.cross),
    )


class RepivotedSignature(NamedTuple):
    rows: List[Tuple[int, int, int]]
    diag: List[int]
    cross: List[int]
    scalar: ExactScalar


def repivot(f: AffineSignature, pivot_order: Sequence[int]) -> RepivotedSignature:
    """
    Re-express a nonzero signature with support pivots chosen greedily in pivot_order.
    The returned phase mentions only the new free variables.
    """
    if f.is_zero:
        raise AffSimContractError("Cannot re-pivot the zero signature")

    masks = f.support.matrix.data
    reduced = reduce_rows(masks, list(f.support.rhs), pivot_order)

    buffer = PhaseBuffer(f.phase.diag, f.phase.cross)
    q = 0

    for pivot, mask, b in reduced.rows:
        q += buffer.substitute(pivot, mask ^ (1 << pivot), b)

    return RepivotedSignature(reduced.rows, buffer.diag_list(), buffer.cross, f.scalar * ExactScalar(0, q))
