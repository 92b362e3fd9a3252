from pytest import raises

from affinesim import (
    AffSimContractError,
    AffSimSingularError,
    ExactScalar,
    UnitaryVerdict,
    check_unitary,
    unitarize,
)
from affinesim.parser import parse_signature_file
from affinesim.signature import canonical_signature, cnot_signature, h_signature, p_signature, zero_signature


def test_generators_unitary():
    for f, p in ((h_signature(), -1), (p_signature(), 0), (cnot_signature(), 0)):
        check = check_unitary(f)

        assert check.verdict == UnitaryVerdict.UNITARY
        assert check.required_p == p
        assert str(check) == "unitary"


def test_signature_file_unitary(helper):
    check = check_unitary(parse_signature_file(helper.config_file("p_gate.sig")))

    assert check.verdict == UnitaryVerdict.UNITARY


def test_unitary_after_scaling():
    f = h_signature().scale(ExactScalar(3, 5))
    check = check_unitary(f)

    # Only the magnitude is fixed by rescaling, the phase w^5 stays
    assert check.verdict == UnitaryVerdict.UNITARY_AFTER_SCALING
    assert check.required_p == -1
    assert str(check) == "unitary-after-scaling p=-1"

    assert unitarize(f) == h_signature().scale(ExactScalar(0, 5))


def test_singular():
    # |0><0| and the all ones matrix
    projector = canonical_signature(2, ExactScalar.one(), [(0b01, 0), (0b10, 0)], [0, 0], [0, 0])
    ones = canonical_signature(2, ExactScalar.one(), [], [0, 0], [0, 0])

    for f in (projector, ones, zero_signature(2)):
        check = check_unitary(f)

        assert check.is_singular
        assert check.reason

        with raises(AffSimSingularError):
            unitarize(f)


def test_odd_arity():
    with raises(AffSimContractError):
        check_unitary(canonical_signature(3, ExactScalar.one(), [], [0, 0, 0], [0, 0, 0]))
