from math import sqrt
from typing import Optional

from affinesim.error import AffSimContractError

_HALF_SQRT2 = sqrt(0.5)

# Exact real and imaginary parts of w^q, w = exp(i*pi/4)
_OMEGA_POWERS = (
    (1.0, 0.0),
    (_HALF_SQRT2, _HALF_SQRT2),
    (0.0, 1.0),
    (-_HALF_SQRT2, _HALF_SQRT2),
    (-1.0, 0.0),
    (-_HALF_SQRT2, -_HALF_SQRT2),
    (0.0, -1.0),
    (_HALF_SQRT2, -_HALF_SQRT2),
)


class ExactScalar:
    """
    Element of {0} and {2^(p/2) * w^q}, w = exp(i*pi/4).
    Zero is canonical: is_zero with p = 0 and q = 0.
    """

    __slots__ = ("is_zero", "p", "q")

    def __init__(self, p: int = 0, q: int = 0, is_zero: bool = False):
        if is_zero:
            self.is_zero = True
            self.p = 0
            self.q = 0
        else:
            self.is_zero = False
            self.p = int(p)
            self.q = int(q) % 8

    @classmethod
    def zero(cls):
        return cls(is_zero=True)

    @classmethod
    def one(cls):
        return cls(0, 0)

    @classmethod
    def i_power(cls, c: int):
        return cls(0, 2 * c)

    def __mul__(self, other: "ExactScalar") -> "ExactScalar":
        if not isinstance(other, ExactScalar):
            return NotImplemented

        if self.is_zero or other.is_zero:
            return ExactScalar.zero()

        return ExactScalar(self.p + other.p, self.q + other.q)

    def conjugate(self) -> "ExactScalar":
        if self.is_zero:
            return self

        return ExactScalar(self.p, -self.q)

    def with_p(self, p: int) -> "ExactScalar":
        if self.is_zero:
            raise AffSimContractError("Cannot rescale the zero scalar")

        return ExactScalar(p, self.q)

    def abs_squared(self) -> "ExactScalar":
        if self.is_zero:
            return self

        return ExactScalar(2 * self.p, 0)

    def dyadic_exponent(self) -> Optional[int]:
        """
        Return s when the scalar equals 2^(-s) for an integer s, None otherwise.
        """
        if self.is_zero or self.q != 0 or self.p % 2:
            return None

        return -self.p // 2

    def to_complex(self) -> complex:
        if self.is_zero:
            return 0j

        re, im = _OMEGA_POWERS[self.q]
        magnitude = 2.0 ** (self.p / 2)

        return complex(re * magnitude, im * magnitude)

    def is_real(self) -> bool:
        return self.is_zero or self.q in (0, 4)

    def __eq__(self, other):
        if not isinstance(other, ExactScalar):
            return False

        return self.is_zero == other.is_zero and self.p == other.p and self.q == other.q

    def __hash__(self):
        return hash((self.is_zero, self.p, self.q))

    def __repr__(self):
        if self.is_zero:
            return "<ExactScalar 0>"

        return f"<ExactScalar 2^({self.p}/2) * w^{self.q}>"
