from pathlib import Path
from pytest import fixture

import numpy as np

from affinesim import AffineSignature, AffSimSettings, BitVec
from affinesim.oracle import dense_signature_matrix


class Helper:
    LITERAL_TOLERANCE = AffSimSettings().literal_tolerance
    TOLERANCE = AffSimSettings().tolerance

    S = 1 / np.sqrt(2)

    H = np.array([[S, S], [S, -S]], dtype=complex)
    P = np.array([[1, 0], [0, 1j]], dtype=complex)
    X = np.array([[0, 1], [1, 0]], dtype=complex)
    Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
    Z = np.array([[1, 0], [0, -1]], dtype=complex)
    I2 = np.eye(2, dtype=complex)
    CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
    CZ = np.diag([1, 1, 1, -1]).astype(complex)

    def __init__(self):
        self.config_path = Path(__file__).parent.parent / "affinesim" / "_config"

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        pass

    def rng(self, seed=0) -> np.random.Generator:
        return np.random.default_rng(seed)

    def config_file(self, name: str) -> Path:
        return self.config_path / name

    def values(self, f: AffineSignature) -> np.ndarray:
        """Every value of f, index x packs variable j into bit j"""
        return np.array([f.evaluate_bits(x).to_complex() for x in range(1 << f.arity)])

    def dense(self, f: AffineSignature) -> np.ndarray:
        return dense_signature_matrix(f)

    def bits(self, text: str) -> BitVec:
        return BitVec.from_string(text)

    def is_close(self, actual, expected, tol=None) -> bool:
        if tol is None:
            tol = self.TOLERANCE

        actual = np.asarray(actual)
        expected = np.asarray(expected)

        return actual.shape == expected.shape and bool(np.allclose(actual, expected, atol=tol, rtol=0))

    def equal_up_to_phase(self, actual, expected, tol=None) -> bool:
        if tol is None:
            tol = self.TOLERANCE

        actual = np.asarray(actual)
        expected = np.asarray(expected)

        idx = np.unravel_index(np.argmax(np.abs(expected)), expected.shape)

        if abs(actual[idx]) <= tol:
            return False

        return self.is_close(actual * (expected[idx] / actual[idx]), expected, tol)


@fixture(scope="session")
def helper():
    with Helper() as helper:
        yield helper
