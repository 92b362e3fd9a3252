import numpy as np

from affinesim.oracle import random_affine_signature
from affinesim.signature import AffineSignature, identify, marginalize, permute, tensor
from affinesim.validator.abc_validator import AbstractValidator


def _values(f: AffineSignature) -> np.ndarray:
    return np.array([f.evaluate_bits(x).to_complex() for x in range(1 << f.arity)])


def _bit(x: int, j: int) -> int:
    return (x >> j) & 1


class ClosureValidator(AbstractValidator):
    """Closure operations against pointwise evaluation"""

    def validate_trial(self, name: str, rng: np.random.Generator):
        max_arity = 2 * self.settings.selftest_max_qubits

        k1 = int(rng.integers(1, max_arity + 1))
        k2 = int(rng.integers(0, max_arity - k1 + 1))

        f = random_affine_signature(k1, rng)
        g = random_affine_signature(k2, rng)

        fv = _values(f)
        gv = _values(g)

        # tensor
        t = tensor(f, g)
        t.check_invariants()
        expected = np.array([fv[x & ((1 << k1) - 1)] * gv[x >> k1] for x in range(1 << (k1 + k2))])
        self.assert_close(_values(t), expected, "tensor")

        # permute
        sigma = [int(v) for v in rng.permutation(k1)]
        p = permute(f, sigma)
        p.check_invariants()
        expected = np.array([fv[sum(_bit(x, sigma[i]) << i for i in range(k1))] for x in range(1 << k1)])
        self.assert_close(_values(p), expected, "permute")

        # marginalize
        j = int(rng.integers(k1))
        m = marginalize(f, j)
        m.check_invariants()
        expected = np.array([fv[_insert(x, j, 0)] + fv[_insert(x, j, 1)] for x in range(1 << (k1 - 1))])
        self.assert_close(_values(m), expected, "marginalize")

        # identify
        if k1 >= 2:
            j, l = (int(v) for v in rng.choice(k1, size=2, replace=False))
            i = identify(f, j, l)
            i.check_invariants()

            rest = [v for v in range(k1) if v != j]
            expected = []

            for x in range(1 << (k1 - 1)):
                full = 0

                for pos, v in enumerate(rest):
                    full |= _bit(x, pos) << v

                full |= _bit(full, l) << j
                expected.append(fv[full])

            self.assert_close(_values(i), np.array(expected), "identify")


def _insert(x: int, j: int, bit: int) -> int:
    low = x & ((1 << j) - 1)
    high = x >> j

    return low | (bit << j) | (high << (j + 1))
