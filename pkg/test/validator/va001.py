from affinesim import AffSimEngine, AffSimSettings
from affinesim.circuit import GateKind
from affinesim.signature import identity_signature, signature_matrix
from affinesim.validator import CliffordGroupValidator, GeneratorValidator, ProbabilityValidator, UnitaryValidator, default_validate_sequence
from affinesim.validator import unitary as unitary_module


def test_default_sequence():
    settings = AffSimSettings(selftest_trials=3, selftest_seed=11, max_workers=2)

    with AffSimEngine(settings) as engine:
        for validator_cls in default_validate_sequence:
            validator = validator_cls(engine)
            validator.validate()

            assert validator.errors == {}, validator_cls.__name__
            assert validator.trial_count >= 1


def test_trial_names():
    with AffSimEngine(AffSimSettings(selftest_trials=2)) as engine:
        assert ProbabilityValidator(engine).get_trials() == ["ProbabilityValidator_0000", "ProbabilityValidator_0001"]
        assert CliffordGroupValidator(engine).get_trials() == ["CliffordGroupValidator_0000"]


def test_trial_seeding():
    with AffSimEngine(AffSimSettings()) as engine:
        validator = ProbabilityValidator(engine)

        # Same trial name, same stream
        assert validator.get_rng("a").integers(1 << 30) == validator.get_rng("a").integers(1 << 30)
        assert validator.get_rng("a").integers(1 << 30) != validator.get_rng("b").integers(1 << 30)


def test_failures_are_collected():
    class FailingValidator(ProbabilityValidator):
        def validate_trial(self, name, rng):
            if name.endswith("1"):
                raise ValueError("broken")

    with AffSimEngine(AffSimSettings(selftest_trials=3)) as engine:
        validator = FailingValidator(engine)
        validator.validate()

        assert list(validator.errors) == ["FailingValidator_0001"]
        assert validator.trial_count == 3


def test_generator_literal_tolerance():
    class IdentityAsPhaseValidator(GeneratorValidator):
        generators = {GateKind.P: lambda: identity_signature(1)}

    with AffSimEngine(AffSimSettings()) as engine:
        validator = GeneratorValidator(engine)
        validator.validate()

        assert validator.errors == {}
        assert validator.trial_count == 1

        validator = IdentityAsPhaseValidator(engine)
        validator.validate()

        assert "[1e-12]" in str(validator.errors["IdentityAsPhaseValidator_0000"])

    # |i - 1| fits a loose literal tolerance
    with AffSimEngine(AffSimSettings(literal_tolerance=2.0)) as engine:
        validator = IdentityAsPhaseValidator(engine)
        validator.validate()

        assert validator.errors == {}


def test_unitary_dense_limit(monkeypatch):
    limits = []

    def recording_matrix(f, limit=None):
        limits.append(limit)
        return signature_matrix(f, limit)

    monkeypatch.setattr(unitary_module, "signature_matrix", recording_matrix)

    with AffSimEngine(AffSimSettings(selftest_trials=100, selftest_max_qubits=2, dense_limit=3)) as engine:
        validator = UnitaryValidator(engine)
        validator.validate()

    assert validator.errors == {}

    # One export per trial after rescaling, one more for signatures already unitary
    assert len(limits) > 100
    assert set(limits) == {3}
