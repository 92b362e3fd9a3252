from .affine import AffineSignature, RepivotedSignature, canonical_signature, repivot
from .contraction import AffineContraction
from .generators import (
    cnot_signature,
    equality_signature,
    h_signature,
    identity_signature,
    p_signature,
    point_signature,
    projector_signature,
    zero_signature,
)
from .operations import (
    DEFAULT_DENSE_LIMIT,
    adjoint,
    close_under_compose,
    compose,
    conjugate,
    eq_mod_phase,
    evaluate,
    from_linear_form,
    identify,
    marginalize,
    permute,
    phase_class_key,
    signature_matrix,
    signature_vector,
    support_points,
    tensor,
    total,
)
from .phase import QuadraticPhase
from .scalar import ExactScalar
from .support import AffineSupport
