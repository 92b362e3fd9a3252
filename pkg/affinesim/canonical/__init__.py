from .form import NonsingularForm, cf_matrix, extract_form
from .unitary import UnitaryCheck, UnitaryVerdict, check_unitary, unitarize
