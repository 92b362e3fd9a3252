from pytest import raises

from affinesim import AffSimEngine, AffSimFormatter, AffSimSettings, ExactScalar


def test_ring_format():
    formatter = AffSimFormatter()

    assert formatter.format_output("{v:ring}", {"v": ExactScalar(-1, 0)}) == "2^(-1/2) * w^0  (≈ 0.7071067812)"
    assert formatter.format_output("{v:ring}", {"v": ExactScalar(-1, 4)}) == "2^(-1/2) * w^4  (≈ -0.7071067812)"
    assert formatter.format_output("{v:ring}", {"v": ExactScalar.zero()}) == "0"

    # Complex values carry both parts
    assert formatter.format_output("{v:approx}", {"v": ExactScalar(0, 2)}) == "0.0000000000+1.0000000000i"
    assert formatter.format_output("{v:approx}", {"v": ExactScalar(1, 7)}) == "1.0000000000-1.0000000000i"


def test_prob_format():
    formatter = AffSimFormatter()

    assert formatter.format_output("{v:prob}", {"v": ExactScalar(-2, 0)}) == "2^(-1)  (≈ 0.5000000000)"
    assert formatter.format_output("{v:prob}", {"v": ExactScalar.one()}) == "2^(-0)  (≈ 1.0000000000)"
    assert formatter.format_output("{v:prob}", {"v": ExactScalar.zero()}) == "0"

    with raises(ValueError):
        formatter.format_output("{v:prob}", {"v": ExactScalar(-1, 0)})


def test_formatter_errors(helper):
    formatter = AffSimFormatter()

    assert formatter.format_output("{v} {n}", {"v": "011", "n": 3}) == "011 3"
    assert formatter.format_output("plain") == "plain"

    with raises(ValueError):
        formatter.format_output("{v:hex}", {"v": 1})

    with raises(ValueError):
        formatter.format_output("{v:bits}", {"v": 1})

    with raises(ValueError):
        formatter.format_output("{v!r}", {"v": 1})


def test_engine_map():
    with AffSimEngine(AffSimSettings(max_workers=2)) as engine:
        assert engine.map(lambda x: x * x, range(6)) == [0, 1, 4, 9, 16, 25]
        assert engine.format("{v:ring}", {"v": ExactScalar.one()}) == "2^(0/2) * w^0  (≈ 1.0000000000)"
