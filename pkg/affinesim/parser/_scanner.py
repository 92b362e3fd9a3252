from pathlib import Path
from re import compile
from typing import Iterator, List, NamedTuple, Optional, Union

from affinesim.error import AffSimParseError


class Token(NamedTuple):
    text: str
    column: int


class ScannedLine(NamedTuple):
    number: int
    tokens: List[Token]

    @property
    def keyword(self) -> str:
        return self.tokens[0].text.lower()


class LineScanner:
    """Splits line-oriented text into tokens, drops blank lines and # comments"""

    comment_start = "#"
    token_re = compile(r"\S+")

    def __init__(self, text: str, path: Optional[Union[str, Path]] = None):
        self.text = text
        self.path = path

    def __iter__(self) -> Iterator[ScannedLine]:
        for number, raw in enumerate(self.text.splitlines(), start=1):
            line = raw.split(self.comment_start, 1)[0]
            tokens = [Token(m.group(0), m.start() + 1) for m in self.token_re.finditer(line)]

            if tokens:
                yield ScannedLine(number, tokens)

    def error(self, message: str, line: Optional[ScannedLine] = None, token: Optional[Token] = None) -> AffSimParseError:
        return AffSimParseError(
            message,
            path=self.path,
            line=line.number if line else None,
            column=token.column if token else (line.tokens[0].column if line else None),
        )

    def integer(self, line: ScannedLine, token: Token, minimum: Optional[int] = None) -> int:
        try:
            value = int(token.text)
        except ValueError:
            raise self.error(f"Expected integer, got [{token.text}]", line, token) from None

        if minimum is not None and value < minimum:
            raise self.error(f"Value [{value}] must be at least [{minimum}]", line, token)

        return value

    def expect_arity(self, line: ScannedLine, count: int):
        if len(line.tokens) != count:
            raise self.error(
                f"Statement [{line.keyword}] expects [{count - 1}] argument(s), got [{len(line.tokens) - 1}]",
                line,
                line.tokens[min(count, len(line.tokens) - 1)],
            )


def read_text(path: Union[str, Path]) -> str:
    path = Path(path)

    if not path.is_file():
        raise AffSimParseError("File does not exist", path=path)

    data = path.read_bytes()

    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line_start = data.rfind(b"\n", 0, e.start) + 1

        raise AffSimParseError(
            f"Invalid UTF-8 byte [0x{data[e.start]:02x}]",
            path=path,
            line=data.count(b"\n", 0, e.start) + 1,
            column=e.start - line_start + 1,
        ) from None
