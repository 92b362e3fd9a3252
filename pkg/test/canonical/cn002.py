from affinesim import UnitaryVerdict, cf_matrix, check_unitary, extract_form, is_nonsingular, signature_matrix
from affinesim.oracle import dense_is_unitary, dense_rank, random_singular_signature, random_unitary_signature
from affinesim.signature import h_signature, p_signature


def test_extract_form_h():
    form = extract_form(h_signature())

    # No support constraint, one free output with C3 = [1]
    assert form.n == 1
    assert form.r == 1
    assert form.free_outputs == [0]
    assert form.dependent_outputs == []
    assert form.C3.to_lists() == [[1]]


def test_extract_form_p():
    form = extract_form(p_signature())

    # Output equals input, phase i^x on the row variable
    assert form.r == 0
    assert form.dependent_outputs == [0]
    assert form.A.to_lists() == [[1]]
    assert list(form.C1.diag) == [1]


def test_form_round_trip():
    for seed in range(20):
        f = random_unitary_signature(3, seed)
        form = extract_form(f)

        assert form.to_signature() == f
        assert is_nonsingular(cf_matrix(form))


def test_random_unitary(helper):
    for seed in range(20):
        f = random_unitary_signature(3, seed)
        check = check_unitary(f)

        assert check.verdict in (UnitaryVerdict.UNITARY, UnitaryVerdict.UNITARY_AFTER_SCALING)

        scaled = f.with_scalar(f.scalar.with_p(check.required_p))
        assert dense_is_unitary(signature_matrix(scaled))


def test_random_singular(helper):
    for seed in range(20):
        f = random_singular_signature(3, seed)

        assert check_unitary(f).is_singular
        assert dense_rank(signature_matrix(f)) < 8
