from pytest import raises

import numpy as np

from affinesim import (
    AffineSignature,
    AffSimContractError,
    ExactScalar,
    NotPauli,
    PauliOperator,
    pauli_to_signature,
    recognize_pauli,
    signature_matrix,
)
from affinesim.oracle import dense_in_pauli_group, pauli_dense
from affinesim.pauli import pauli_from_label, pauli_mul, pauli_single
from affinesim.signature import h_signature


def test_labels():
    p = pauli_from_label("XZ")

    assert p.e.to_string() == "10"
    assert p.r.to_string() == "01"
    assert p.label() == "+XZ"

    # Y carries c = 3, the printed sign compensates
    assert pauli_single("Y", 0, 1).label() == "+Y"
    assert pauli_from_label("-iY").label() == "-iY"
    assert pauli_from_label("-IZY").label() == "-IZY"
    assert str(PauliOperator.identity(2)) == "+II"

    with raises(AffSimContractError):
        pauli_from_label("XQ")

    with raises(AffSimContractError):
        pauli_single("X", 2, 2)


def test_multiplication():
    x = pauli_from_label("X")
    z = pauli_from_label("Z")

    # X Z = -iY, Z X = iY
    assert (x * z).label() == "-iY"
    assert pauli_mul(z, x).label() == "+iY"
    assert (x * x) == PauliOperator.identity(1)

    assert not x.commutes_with(z)
    assert pauli_from_label("XX").commutes_with(pauli_from_label("ZZ"))

    assert pauli_from_label("Y").is_hermitian()
    assert not pauli_from_label("iX").is_hermitian()


def test_dense(helper):
    assert helper.is_close(pauli_dense(pauli_from_label("X")), helper.X, helper.LITERAL_TOLERANCE)
    assert helper.is_close(pauli_dense(pauli_from_label("Y")), helper.Y, helper.LITERAL_TOLERANCE)
    assert helper.is_close(pauli_dense(pauli_from_label("Z")), helper.Z, helper.LITERAL_TOLERANCE)
    assert helper.is_close(pauli_dense(pauli_from_label("-XZ")), -np.kron(helper.X, helper.Z), helper.LITERAL_TOLERANCE)

    for label in ("XYZ", "-iZZI", "+iIYX"):
        p = pauli_from_label(label)
        assert dense_in_pauli_group(pauli_dense(p)) == p

    assert dense_in_pauli_group(helper.H) is None


def test_signature_round_trip(helper):
    for label in ("X", "Y", "Z", "-iXY", "+iZZY", "-YXI"):
        p = pauli_from_label(label)
        f = pauli_to_signature(p)

        assert helper.is_close(signature_matrix(f), pauli_dense(p), helper.LITERAL_TOLERANCE)
        assert recognize_pauli(f) == (p, ExactScalar.one())

        # Leftover scalar keeps the magnitude and an odd power of w
        image, residual = recognize_pauli(f.scale(ExactScalar(-2, 1)))
        assert image == p
        assert residual == ExactScalar(-2, 1)


def test_recognize_rejects(helper):
    result = recognize_pauli(h_signature())

    assert isinstance(result, NotPauli)
    assert not result

    assert not recognize_pauli(AffineSignature.zero(2))

    with raises(AffSimContractError):
        recognize_pauli(AffineSignature.zero(3))
