from .abc_validator import AbstractValidator
from .clifford import CliffordGroupValidator
from .closure import ClosureValidator
from .composition import CompositionValidator
from .f2core import F2CoreValidator
from .formats import FormatValidator
from .generators import GeneratorValidator
from .probability import ProbabilityValidator
from .tableau import TableauValidator
from .unitary import SingularityValidator, UnitaryValidator


default_validate_sequence = [
    F2CoreValidator,
    GeneratorValidator,
    ClosureValidator,
    CompositionValidator,
    UnitaryValidator,
    SingularityValidator,
    TableauValidator,
    ProbabilityValidator,
    FormatValidator,
    CliffordGroupValidator,
]
