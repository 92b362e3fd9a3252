from .lowering import circuit_signature, compose_circuit_signature, expand_macros, gate_signature, state_signature
from .model import Circuit, Gate, GateKind
from .queries import amplitude, marginal_probability, probability_by_counting, sample_outcome, state_marginal
