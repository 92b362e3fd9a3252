from pathlib import Path
from typing import Optional, Union


class AffSimContractError(ValueError):
    pass


class AffSimDenseLimitError(ValueError):
    def __init__(self, n: int, limit: int):
        self.n = n
        self.limit = limit

        super().__init__(f"Dense export of [{n}] qubits exceeds configured limit [{limit}]")


class AffSimParseError(ValueError):
    def __init__(self, message: str, path: Optional[Union[str, Path]] = None, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.path = path
        self.line = line
        self.column = column

        super().__init__(self.short_message())

    def short_message(self):
        location = str(self.path) if self.path else "<text>"

        if self.line is not None:
            location += f":{self.line}"

            if self.column is not None:
                location += f":{self.column}"

        return f"{location}: {self.message}"

    def verbose_message(self):
        params = {
            "message": self.message,
            "path": self.path,
            "line": self.line,
            "column": self.column,
        }

        pad_length = max(len(x) for x in params)
        res = ""

        for k in params:
            res += f"    {k.ljust(pad_length)}  =>  {params[k]}\n"

        return "(\n" + res + ")"


class AffSimSingularError(Exception):
    def __init__(self, reason: str):
        self.reason = reason

        super().__init__(f"Signature matrix is singular: {reason}")


class AffSimTheoremViolation(Exception):
    pass


class AffSimInvariantViolation(Exception):
    pass
