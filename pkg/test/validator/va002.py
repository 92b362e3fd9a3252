from pytest import mark

from affinesim import AffSimEngine, AffSimSettings
from affinesim.validator import (
    CliffordGroupValidator,
    ClosureValidator,
    CompositionValidator,
    FormatValidator,
    GeneratorValidator,
    ProbabilityValidator,
    SingularityValidator,
    TableauValidator,
    UnitaryValidator,
)


# (suite, trials, max qubits), closure works on arity up to twice the qubit count
ACCEPTANCE_SIZES = [
    (GeneratorValidator, 1, 1),
    (CompositionValidator, 200, 4),
    (ClosureValidator, 500, 5),
    (UnitaryValidator, 300, 4),
    (SingularityValidator, 300, 3),
    (TableauValidator, 500, 4),
    (CliffordGroupValidator, 1, 1),
    (ProbabilityValidator, 200, 3),
    (FormatValidator, 100, 3),
]


@mark.parametrize("validator_cls, trials, max_qubits", ACCEPTANCE_SIZES, ids=[cls.__name__ for cls, _, _ in ACCEPTANCE_SIZES])
def test_acceptance_size(validator_cls, trials, max_qubits):
    settings = AffSimSettings(selftest_trials=trials, selftest_max_qubits=max_qubits, selftest_seed=2024)

    with AffSimEngine(settings) as engine:
        validator = validator_cls(engine)
        validator.validate()

        assert validator.trial_count == trials
        assert validator.errors == {}
