from ._scanner import LineScanner, ScannedLine, Token
from .circuit import parse_circuit, parse_circuit_file
from .settings import parse_settings_file, settings_json_schema
from .signature import parse_signature, parse_signature_file
