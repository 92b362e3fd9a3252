from .circuit import circuit_to_text
from .signature import signature_to_text
from .tableau import tableau_to_text
