from pytest import raises

from affinesim import AffSimParseError, circuit_to_text, signature_to_text
from affinesim.oracle import random_affine_signature, random_clifford_circuit
from affinesim.parser import parse_circuit, parse_circuit_file, parse_signature, parse_signature_file
from affinesim.signature import AffineSignature, h_signature, p_signature


def test_circuit_text():
    circuit = random_clifford_circuit(3, 10, 0)
    text = circuit_to_text(circuit)

    assert text.startswith("qubits 3\n")
    assert len(text.splitlines()) == 11
    assert parse_circuit(text) == circuit


def test_signature_text():
    assert signature_to_text(p_signature()) == "sig k=2 p=0 q=0 zero=0\nrow 11 = 0\ndiag 0 1\n"
    assert signature_to_text(h_signature()) == "sig k=2 p=-1 q=0 zero=0\ndiag 0 0\ncross 0 1\n"

    for seed in range(20):
        f = random_affine_signature(5, seed)
        assert parse_signature(signature_to_text(f)) == f

    zero = AffineSignature.zero(3)
    assert signature_to_text(zero) == "sig k=3 p=0 q=0 zero=1\ndiag 0 0 0\n"
    assert parse_signature(signature_to_text(zero)) == zero


def test_signature_files(helper):
    assert parse_signature_file(helper.config_file("h_gate.sig")) == h_signature()
    assert parse_signature_file(helper.config_file("p_gate.sig")) == p_signature()


def test_signature_canonicalized():
    # Non reduced rows and a phase on a pivot are brought to canonical form
    f = parse_signature("sig k=2 p=0 q=0 zero=0\nrow 11 = 0\nrow 11 = 0\ndiag 1 0\n")

    assert f == p_signature()


def test_signature_errors():
    bad = {
        "missing header": "row 11 = 0\n",
        "missing parameter": "sig k=2 p=0 q=0\ndiag 0 0\n",
        "q out of range": "sig k=2 p=0 q=8 zero=0\ndiag 0 0\n",
        "row length": "sig k=2 p=0 q=0 zero=0\nrow 101 = 0\ndiag 0 0\n",
        "row rhs": "sig k=2 p=0 q=0 zero=0\nrow 11 = 2\ndiag 0 0\n",
        "diag range": "sig k=2 p=0 q=0 zero=0\ndiag 0 4\n",
        "diag twice": "sig k=2 p=0 q=0 zero=0\ndiag 0 0\ndiag 0 0\n",
        "diag missing": "sig k=2 p=0 q=0 zero=0\n",
        "cross order": "sig k=2 p=0 q=0 zero=0\ndiag 0 0\ncross 1 0\n",
        "cross twice": "sig k=3 p=0 q=0 zero=0\ndiag 0 0 0\ncross 0 2\ncross 0 2\n",
        "unknown": "sig k=1 p=0 q=0 zero=0\ndiag 0\nphase 1\n",
    }

    for name, text in bad.items():
        with raises(AffSimParseError):
            parse_signature(text, name)

    with raises(AffSimParseError) as e:
        parse_signature("sig k=2 p=0 q=0 zero=0\ndiag 0 0\ncross 0 5\n", "bad.sig")

    assert e.value.line == 3
    assert "bad.sig:3" in str(e.value)


def test_invalid_encoding(tmp_path):
    path = tmp_path / "latin.qc"
    path.write_bytes(b"qubits 2\nh 0\n# caf\xe9\n")

    with raises(AffSimParseError) as e:
        parse_circuit_file(path)

    assert e.value.line == 3
    assert e.value.column == 6
    assert f"{path}:3:6:" in str(e.value)

    path = tmp_path / "latin.sig"
    path.write_bytes(b"sig k=1 p=0 q=0 zero=0\n\xff\n")

    with raises(AffSimParseError) as e:
        parse_signature_file(path)

    assert e.value.line == 2
