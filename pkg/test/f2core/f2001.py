from pytest import raises

from affinesim import AffSimContractError, BitVec


def test_bitvec_text(helper):
    v = helper.bits("0101")

    # Element 0 is listed first
    assert v.bits == 0b1010
    assert v.to_string() == "0101"
    assert list(v) == [0, 1, 0, 1]


def test_bitvec_arithmetic(helper):
    a = helper.bits("1100")
    b = helper.bits("1010")

    assert (a ^ b).to_string() == "0110"
    assert (a & b).to_string() == "1000"
    assert (a | b).to_string() == "1110"
    assert a.dot(b) == 1
    assert a.popcount() == 2

    assert BitVec.unit(4, 2).to_string() == "0010"
    assert BitVec.zeros(3).is_zero()


def test_bitvec_errors(helper):
    with raises(AffSimContractError):
        BitVec.from_string("012")

    with raises(AffSimContractError):
        BitVec(2, 0b100)

    # Vectors of different length never mix
    with raises(AffSimContractError):
        helper.bits("01") ^ helper.bits("011")

    with raises(IndexError):
        helper.bits("01")[2]
