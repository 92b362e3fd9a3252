from jsonschema import ValidationError, validate
from pathlib import Path
from typing import Union
from yaml import SafeLoader, YAMLError, load

from affinesim.error import AffSimParseError
from affinesim.settings import AffSimSettings


# fmt: off
settings_json_schema = {
    "type": "object",
    "properties": {
        "log_level": {
            "type": "string",
            "enum": ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        },
        "dense_limit": {
            "type": "integer",
            "minimum": 0
        },
        "tolerance": {
            "type": "number",
            "exclusiveMinimum": 0
        },
        "literal_tolerance": {
            "type": "number",
            "exclusiveMinimum": 0
        },
        "max_workers": {
            "type": "integer",
            "minimum": 1
        },
        "selftest_trials": {
            "type": "integer",
            "minimum": 1
        },
        "selftest_max_qubits": {
            "type": "integer",
            "minimum": 1,
            "maximum": 5
        },
        "selftest_seed": {
            "type": "integer",
            "minimum": 0
        },
        "bench_qubits": {
            "type": "array",
            "items": {
                "type": "integer",
                "minimum": 1
            }
        },
        "bench_gates": {
            "type": "array",
            "items": {
                "type": "integer",
                "minimum": 0
            }
        },
        "bench_seed": {
            "type": "integer",
            "minimum": 0
        }
    },
    "additionalProperties": False
}
# fmt: on


def parse_settings_file(path: Union[str, Path]) -> AffSimSettings:
    path = Path(path)

    if not path.is_file():
        raise AffSimParseError("Settings file does not exist", path=path)

    try:
        with path.open("r", encoding="utf-8") as f:
            params = load(f, Loader=SafeLoader) or {}
    except YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        raise AffSimParseError(
            f"Invalid YAML: {e}",
            path=path,
            line=mark.line + 1 if mark else None,
            column=mark.column + 1 if mark else None,
        ) from None

    try:
        validate(params, settings_json_schema)
    except ValidationError as e:
        raise AffSimParseError(f"Invalid settings: {e.message}", path=path) from None

    return AffSimSettings(**params)
