from logging import getLogger, NullHandler
from typing import Dict, List, Optional, Sequence, Tuple

from affinesim.error import AffSimContractError
from affinesim.f2core import iter_bits, lowest_bit
from affinesim.signature.phase import PhaseBuffer
from affinesim.signature.affine import AffineSignature, canonical_signature
from affinesim.signature.scalar import ExactScalar


logger = getLogger(__name__)
logger.addHandler(NullHandler())


class AffineContraction:
    """
    Mutable workspace for contracting affine signatures.

    Variables are bit positions of packed integers, positions of summed variables are recycled.
    Pivot variables of the constraint rows never appear in the phase, in other rows, or in tracked forms.
    """

    def __init__(self):
        self.phase = PhaseBuffer()

        self.rows: Dict[int, Tuple[int, int]] = {}
        self.pivot_mask = 0

        self.live_mask = 0
        self.external_mask = 0

        self.forms: List[Tuple[int, int]] = []
        self.form_edits = 0

        self.is_zero = False
        self.p = 0
        self.q = 0

        self._recycled: List[int] = []

    @property
    def scalar(self) -> ExactScalar:
        if self.is_zero:
            return ExactScalar.zero()

        return ExactScalar(self.p, self.q)

    @property
    def live_count(self):
        return bin(self.live_mask).count("1")

    def new_var(self) -> int:
        if self._recycled:
            v = self._recycled.pop()
        else:
            v = self.phase.grow()

        self.live_mask |= 1 << v

        return v

    def _release(self, v: int):
        self.phase.set_diag(v, 0)
        self.phase.cross[v] = 0
        self.live_mask &= ~(1 << v)
        self.external_mask &= ~(1 << v)
        self._recycled.append(v)

    def _check_live(self, v: int):
        if not (self.live_mask >> v) & 1:
            raise AffSimContractError(f"Variable [{v}] is not live in this contraction")

    def set_zero(self):
        self.is_zero = True

    def scale(self, p: int = 0, q: int = 0):
        self.p += p
        self.q = (self.q + q) % 8

    def multiply(self, factor: ExactScalar):
        if factor.is_zero:
            self.set_zero()
        else:
            self.scale(factor.p, factor.q)

    def reduce(self, mask: int, const: int) -> Tuple[int, int]:
        hit = mask & self.pivot_mask

        for d in iter_bits(hit):
            row_mask, row_rhs = self.rows[d]
            mask ^= row_mask
            const ^= row_rhs

        return mask, const & 1

    def add_form(self, mask: int, const: int) -> int:
        self.forms.append(self.reduce(mask, const))
        return len(self.forms) - 1

    def forms_mask(self) -> int:
        res = 0

        for mask, _ in self.forms:
            res |= mask

        return res

    def add_square(self, mask: int, const: int, a: int):
        if self.is_zero:
            return

        mask, const = self.reduce(mask, const)
        self.q = (self.q + self.phase.add_square(mask, const, a)) % 8

    def add_product(self, m1: int, k1: int, m2: int, k2: int):
        if self.is_zero:
            return

        m1, k1 = self.reduce(m1, k1)
        m2, k2 = self.reduce(m2, k2)
        self.q = (self.q + self.phase.add_product(m1, k1, m2, k2)) % 8

    def add_constraint(self, mask: int, const: int, prefer: Optional[int] = None):
        if self.is_zero:
            return

        mask, const = self.reduce(mask, const)

        if not mask:
            if const:
                self.set_zero()

            return

        if prefer is None:
            prefer = ~self.external_mask

        d = lowest_bit(mask & prefer or mask)

        self._eliminate(d, mask, const)

        self.rows[d] = (mask, const)
        self.pivot_mask |= 1 << d

    def _eliminate(self, d: int, mask: int, const: int):
        # x_d := (mask without d) + const everywhere except the row being installed
        bit = 1 << d

        for pivot, (row_mask, row_rhs) in self.rows.items():
            if row_mask & bit:
                self.rows[pivot] = (row_mask ^ mask, row_rhs ^ const)

        self.q = (self.q + self.phase.substitute(d, mask ^ bit, const)) % 8

        for i, (form_mask, form_const) in enumerate(self.forms):
            if form_mask & bit:
                self.forms[i] = (form_mask ^ mask, form_const ^ const)
                self.form_edits += 1

    def sum_out(self, v: int):
        self._check_live(v)
        bit = 1 << v

        if self.is_zero:
            self.rows.pop(v, None)
            self.pivot_mask &= ~bit
            self._release(v)
            return

        if self.pivot_mask & bit:
            del self.rows[v]
            self.pivot_mask ^= bit
            self._release(v)
            return

        owner = next((pivot for pivot, (row_mask, _) in self.rows.items() if row_mask & bit), None)

        if owner is not None:
            # re-pivot the owning row on v, then drop it
            row_mask, row_rhs = self.rows.pop(owner)
            self.pivot_mask ^= 1 << owner
            self._eliminate(v, row_mask, row_rhs)
            self._release(v)
            return

        for form_mask, _ in self.forms:
            if form_mask & bit:
                raise AffSimContractError(f"Variable [{v}] is still referenced by a tracked form")

        c, linear = self.phase.clear(v)
        self._release(v)

        # sum over x_v of i^(c*x_v + 2*x_v*L) = 1 + i^(c + 2L)
        if c == 0:
            self.scale(p=2)
            self.add_constraint(linear, 0)
        elif c == 2:
            self.scale(p=2)
            self.add_constraint(linear, 1)
        elif c == 1:
            self.scale(p=1, q=1)
            self.add_square(linear, 0, 3)
        else:
            self.scale(p=1, q=7)
            self.add_square(linear, 0, 1)

    def join(self, a: int, b: int):
        """Identify variable a with variable b, then drop a"""
        if a == b:
            raise AffSimContractError(f"Cannot identify variable [{a}] with itself")

        self._check_live(a)
        self._check_live(b)

        self.add_constraint((1 << a) | (1 << b), 0, prefer=1 << a)
        self.sum_out(a)

    def attach(self, f: AffineSignature) -> List[int]:
        variables = [self.new_var() for _ in range(f.arity)]

        if self.is_zero:
            return variables

        if f.is_zero:
            self.set_zero()
            return variables

        def translate(mask: int) -> int:
            return sum(1 << variables[i] for i in iter_bits(mask))

        self.multiply(f.scalar)

        for j, v in enumerate(variables):
            self.phase.set_diag(v, f.phase.diag[j])
            self.phase.cross[v] = translate(f.phase.cross[j])

        for pivot, mask, rhs in f.support.rows():
            self.rows[variables[pivot]] = (translate(mask), rhs)
            self.pivot_mask |= 1 << variables[pivot]

        return variables

    def sum_all_except(self, keep: Sequence[int]):
        keep_mask = sum(1 << v for v in keep)

        for v in iter_bits(self.live_mask & ~keep_mask):
            self.sum_out(v)

    def to_signature(self, order: Sequence[int]) -> AffineSignature:
        order_mask = 0

        for v in order:
            self._check_live(v)
            order_mask |= 1 << v

        if order_mask != self.live_mask or len(order) != self.live_count:
            raise AffSimContractError("Every live variable must appear exactly once in the output order")

        k = len(order)

        if self.is_zero:
            return AffineSignature.zero(k)

        position = {v: i for i, v in enumerate(order)}

        def translate(mask: int) -> int:
            return sum(1 << position[v] for v in iter_bits(mask))

        rows = [(translate(mask), rhs) for mask, rhs in self.rows.values()]
        diag = self.phase.diag_list(order)
        cross = [translate(self.phase.cross[v]) for v in order]

        logger.debug(f"Contraction closed with [{k}] variables and [{len(rows)}] constraints")

        return canonical_signature(k, self.scalar, rows, diag, cross)
