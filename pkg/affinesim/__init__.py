from .app import BaseApp, entry_point, run
from .canonical import NonsingularForm, UnitaryCheck, UnitaryVerdict, cf_matrix, check_unitary, extract_form, unitarize
from .circuit import (
    Circuit,
    Gate,
    GateKind,
    amplitude,
    circuit_signature,
    expand_macros,
    gate_signature,
    marginal_probability,
    sample_outcome,
    state_signature,
)
from .converter import circuit_to_text, signature_to_text, tableau_to_text
from .engine import AffSimEngine
from .error import (
    AffSimContractError,
    AffSimDenseLimitError,
    AffSimInvariantViolation,
    AffSimParseError,
    AffSimSingularError,
    AffSimTheoremViolation,
)
from .f2core import BitVec, F2Matrix, Infeasible, is_nonsingular, rank, rref, solve_affine
from .formatter import AffSimFormatter
from .parser import parse_circuit, parse_circuit_file, parse_signature, parse_signature_file
from .pauli import CliffordTableau, NotPauli, PauliOperator, clifford_tableau_of, pauli_to_signature, recognize_pauli
from .settings import AffSimSettings
from .signature import (
    AffineSignature,
    ExactScalar,
    adjoint,
    compose,
    conjugate,
    eq_mod_phase,
    identify,
    marginalize,
    permute,
    signature_matrix,
    tensor,
)
from .version import __version__
