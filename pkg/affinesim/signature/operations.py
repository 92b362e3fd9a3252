from typing import List, Optional, Sequence, Tuple

import numpy as np

from affinesim.error import AffSimContractError, AffSimDenseLimitError
from affinesim.f2core import BitVec, F2Matrix, solve_affine
from affinesim.signature.affine import AffineSignature
from affinesim.signature.contraction import AffineContraction
from affinesim.signature.phase import QuadraticPhase
from affinesim.signature.scalar import ExactScalar


DEFAULT_DENSE_LIMIT = 10

_I_POWERS = np.array([1, 1j, -1, -1j], dtype=complex)


def _check_index(f: AffineSignature, j: int):
    if not 0 <= j < f.arity:
        raise AffSimContractError(f"Variable index [{j}] is out of range for arity [{f.arity}]")


def _check_even(f: AffineSignature) -> int:
    if f.arity % 2:
        raise AffSimContractError(f"Signature arity [{f.arity}] must be even")

    return f.arity // 2


def from_linear_form(
    k: int,
    scalar: ExactScalar,
    a: F2Matrix,
    b: BitVec,
    alphas: Sequence[Tuple[BitVec, int]],
) -> AffineSignature:
    """
    scalar * chi_{A x = b} * i^(sum_j <alpha_j, x> + const_j), every indicator enters as its own square.
    """
    if a.cols != k or a.rows != b.len:
        raise AffSimContractError(f"Constraint system [{a.rows}x{a.cols}] does not fit arity [{k}] and rhs [{b.len}]")

    engine = AffineContraction()
    variables = [engine.new_var() for _ in range(k)]
    engine.multiply(scalar)

    for alpha, const in alphas:
        if alpha.len != k:
            raise AffSimContractError(f"Linear form length [{alpha.len}] does not match arity [{k}]")

        engine.add_square(alpha.bits, const & 1, 1)

    for i in range(a.rows):
        engine.add_constraint(a.data[i], b[i])

    return engine.to_signature(variables)


def evaluate(f: AffineSignature, x: BitVec) -> ExactScalar:
    return f.evaluate(x)


def tensor(f: AffineSignature, g: AffineSignature) -> AffineSignature:
    engine = AffineContraction()
    left = engine.attach(f)
    right = engine.attach(g)

    return engine.to_signature(left + right)


def permute(f: AffineSignature, sigma: Sequence[int]) -> AffineSignature:
    """Result(x) = f(x[sigma[0]], ..., x[sigma[k-1]])"""
    if sorted(sigma) != list(range(f.arity)):
        raise AffSimContractError(f"Permutation [{list(sigma)}] is not a bijection on [{f.arity}] variables")

    engine = AffineContraction()
    variables = engine.attach(f)

    order = [0] * f.arity

    for i, target in enumerate(sigma):
        order[target] = variables[i]

    return engine.to_signature(order)


def identify(f: AffineSignature, j: int, l: int) -> AffineSignature:
    """Set x_j equal to x_l and drop variable j"""
    _check_index(f, j)
    _check_index(f, l)

    if j == l:
        raise AffSimContractError(f"Cannot identify variable [{j}] with itself")

    engine = AffineContraction()
    variables = engine.attach(f)
    engine.join(variables[j], variables[l])

    return engine.to_signature(variables[:j] + variables[j + 1 :])


def marginalize(f: AffineSignature, j: int) -> AffineSignature:
    _check_index(f, j)

    engine = AffineContraction()
    variables = engine.attach(f)
    engine.sum_out(variables[j])

    return engine.to_signature(variables[:j] + variables[j + 1 :])


def total(f: AffineSignature) -> ExactScalar:
    engine = AffineContraction()
    engine.attach(f)
    engine.sum_all_except([])

    return engine.scalar


def conjugate(f: AffineSignature) -> AffineSignature:
    if f.is_zero:
        return f

    return AffineSignature(f.arity, f.scalar.conjugate(), f.support, f.phase.conjugate())


def adjoint(f: AffineSignature) -> AffineSignature:
    _check_even(f)

    return permute(conjugate(f), [f.arity - 1 - i for i in range(f.arity)])


def compose(f: AffineSignature, g: AffineSignature) -> AffineSignature:
    """Signature with matrix M_f * M_g"""
    n = _check_even(f)

    if g.arity != f.arity:
        raise AffSimContractError(f"Cannot compose signatures of arity [{f.arity}] and [{g.arity}]")

    engine = AffineContraction()
    left = engine.attach(f)
    right = engine.attach(g)

    # column bit k of f meets row bit k of g
    for k in range(n - 1, -1, -1):
        engine.join(right[k], left[2 * n - 1 - k])

    for v in left[n:]:
        engine.sum_out(v)

    return engine.to_signature(left[:n] + right[n:])


def eq_mod_phase(f: AffineSignature, g: AffineSignature) -> bool:
    return phase_class_key(f) == phase_class_key(g)


def phase_class_key(f: AffineSignature):
    """Hashable key shared exactly by signatures equal up to a unit phase"""
    if f.is_zero:
        return (f.arity, None)

    return (f.arity, f.support, f.phase, f.scalar.p)


def close_under_compose(generators: Sequence[AffineSignature], max_size: int = 100000) -> List[AffineSignature]:
    """All products of the generators, one representative per class up to phase"""
    found = {}
    frontier = []

    for g in generators:
        key = phase_class_key(g)

        if key not in found:
            found[key] = g
            frontier.append(g)

    while frontier:
        next_frontier = []

        for f in frontier:
            for g in generators:
                h = compose(g, f)
                key = phase_class_key(h)

                if key not in found:
                    if len(found) >= max_size:
                        raise AffSimContractError(f"Closure exceeds [{max_size}] elements")

                    found[key] = h
                    next_frontier.append(h)

        frontier = next_frontier

    return list(found.values())


def support_points(f: AffineSignature) -> np.ndarray:
    """All support points as an (N, arity) uint8 array, variable j in column j"""
    solution = solve_affine(f.support.matrix, f.support.rhs)
    free = len(solution.kernel_basis)

    combos = np.arange(1 << free, dtype=np.int64)
    points = np.zeros((1 << free, f.arity), dtype=np.uint8)
    points[:, :] = [(solution.particular.bits >> j) & 1 for j in range(f.arity)]

    for t, vec in enumerate(solution.kernel_basis):
        chosen = ((combos >> t) & 1).astype(np.uint8)
        points ^= np.outer(chosen, np.array(list(vec), dtype=np.uint8))

    return points


def phase_values(phase: QuadraticPhase, points: np.ndarray) -> np.ndarray:
    k = phase.arity
    diag = np.array(phase.diag, dtype=np.int64)
    cross = np.array([[(phase.cross[j] >> l) & 1 for l in range(k)] for j in range(k)], dtype=np.int64).reshape(k, k)

    x = points.astype(np.int64)

    return (x @ diag + ((x @ cross) * x).sum(axis=1)) % 4


def signature_matrix(f: AffineSignature, limit: Optional[int] = None) -> np.ndarray:
    """
    Dense 2^n x 2^n matrix of an arity 2n signature.
    Row index is (x_0 .. x_{n-1}) big-endian, column index is (x_{2n-1} .. x_n) big-endian.
    """
    n = _check_even(f)

    if limit is None:
        limit = DEFAULT_DENSE_LIMIT

    if n > limit:
        raise AffSimDenseLimitError(n, limit)

    res = np.zeros((1 << n, 1 << n), dtype=complex)

    if f.is_zero:
        return res

    points = support_points(f).astype(np.int64)
    q = phase_values(f.phase, points)

    row_weights = np.array([1 << (n - 1 - j) for j in range(n)], dtype=np.int64)
    col_weights = np.array([1 << (j - n) for j in range(n, 2 * n)], dtype=np.int64)

    rows = points[:, :n] @ row_weights
    cols = points[:, n:] @ col_weights

    res[rows, cols] = f.scalar.to_complex() * _I_POWERS[q]

    return res


def signature_vector(f: AffineSignature, limit: Optional[int] = None) -> np.ndarray:
    """Dense vector of an arity n signature, index (x_0 .. x_{n-1}) big-endian"""
    if limit is None:
        limit = DEFAULT_DENSE_LIMIT

    if f.arity > 2 * limit:
        raise AffSimDenseLimitError(f.arity, 2 * limit)

    res = np.zeros(1 << f.arity, dtype=complex)

    if f.is_zero:
        return res

    points = support_points(f).astype(np.int64)
    q = phase_values(f.phase, points)

    weights = np.array([1 << (f.arity - 1 - j) for j in range(f.arity)], dtype=np.int64)
    res[points @ weights] = f.scalar.to_complex() * _I_POWERS[q]

    return res
