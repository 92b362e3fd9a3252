from .conversion import NotPauli, pauli_to_signature, recognize_pauli
from .operator import PauliOperator, pauli_from_label, pauli_mul, pauli_single
from .tableau import CliffordTableau, clifford_tableau_of, conjugate_by, tableau_is_symplectic
