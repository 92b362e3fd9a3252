from .dense import (
    DEFAULT_TOLERANCE,
    GATE_MATRICES,
    dense_circuit,
    dense_gate,
    dense_in_pauli_group,
    dense_is_clifford,
    dense_is_unitary,
    dense_rank,
    dense_signature_matrix,
    dense_state,
    pauli_dense,
)
from .generators import (
    PRIMITIVE_KINDS,
    random_affine_signature,
    random_clifford_circuit,
    random_singular_signature,
    random_unitary_signature,
)
