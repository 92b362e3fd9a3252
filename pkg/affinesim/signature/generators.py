from typing import Sequence

from affinesim.error import AffSimContractError
from affinesim.signature.affine import AffineSignature, canonical_signature
from affinesim.signature.scalar import ExactScalar


def h_signature() -> AffineSignature:
    # 1/sqrt(2) * i^(2 x0 x1)
    return canonical_signature(2, ExactScalar(-1, 0), [], [0, 0], [0b10, 0b01])


def p_signature() -> AffineSignature:
    # chi_{x0 = x1} * i^(x0^2)
    return canonical_signature(2, ExactScalar.one(), [(0b11, 0)], [1, 0], [0, 0])


def cnot_signature() -> AffineSignature:
    # chi_{x0 = x3 = x1 + x2}, control is qubit 0
    return canonical_signature(4, ExactScalar.one(), [(0b1001, 0), (0b0111, 0)], [0] * 4, [0] * 4)


def identity_signature(n: int) -> AffineSignature:
    rows = [((1 << j) | (1 << (2 * n - 1 - j)), 0) for j in range(n)]
    return canonical_signature(2 * n, ExactScalar.one(), rows, [0] * (2 * n), [0] * (2 * n))


def equality_signature(k: int) -> AffineSignature:
    rows = [((1 << j) | (1 << (j + 1)), 0) for j in range(k - 1)]
    return canonical_signature(k, ExactScalar.one(), rows, [0] * k, [0] * k)


def point_signature(bits: Sequence[int]) -> AffineSignature:
    k = len(bits)

    for bit in bits:
        if bit not in (0, 1):
            raise AffSimContractError(f"Value [{bit}] is not a bit")

    rows = [(1 << j, bit) for j, bit in enumerate(bits)]
    return canonical_signature(k, ExactScalar.one(), rows, [0] * k, [0] * k)


def projector_signature(bit: int) -> AffineSignature:
    return point_signature([bit])


def zero_signature(k: int) -> AffineSignature:
    return AffineSignature.zero(k)
