from pathlib import Path
from re import compile
from typing import Optional, Union

from affinesim.parser._scanner import LineScanner, ScannedLine, read_text
from affinesim.signature import AffineSignature, ExactScalar, canonical_signature


_HEADER_PARAM_RE = compile(r"^(k|p|q|zero)=(-?\d+)$")
_BITS_RE = compile(r"^[01]*$")


def _parse_header(scanner: LineScanner, line: ScannedLine) -> dict:
    if line.keyword != "sig":
        raise scanner.error(f"Expected [sig] header, got [{line.tokens[0].text}]", line)

    params = {}

    for token in line.tokens[1:]:
        m = _HEADER_PARAM_RE.match(token.text)

        if not m:
            raise scanner.error(f"Invalid header parameter [{token.text}]", line, token)

        if m.group(1) in params:
            raise scanner.error(f"Duplicate header parameter [{m.group(1)}]", line, token)

        params[m.group(1)] = (int(m.group(2)), token)

    for name in ("k", "p", "q", "zero"):
        if name not in params:
            raise scanner.error(f"Header parameter [{name}] is missing", line)

    k, k_token = params["k"]
    q, q_token = params["q"]
    zero, zero_token = params["zero"]

    if k < 0:
        raise scanner.error(f"Arity [{k}] must not be negative", line, k_token)

    if not 0 <= q < 8:
        raise scanner.error(f"Exponent q [{q}] must be in range 0..7", line, q_token)

    if zero not in (0, 1):
        raise scanner.error(f"Flag zero [{zero}] must be 0 or 1", line, zero_token)

    return {"k": k, "p": params["p"][0], "q": q, "zero": zero}


def parse_signature(text: str, path: Optional[Union[str, Path]] = None) -> AffineSignature:
    """
    Record layout:
        sig k=<arity> p=<int> q=<0..7> zero=<0|1>
        row <bits> = <bit>      (one per support constraint, variable 0 first)
        diag <k values in 0..3>
        cross j l               (one per set cross bit, j < l)
    """
    scanner = LineScanner(text, path)
    header = None
    diag = None

    rows = []
    cross = []
    seen_pairs = set()

    for line in scanner:
        if header is None:
            header = _parse_header(scanner, line)
            cross = [0] * header["k"]
            continue

        k = header["k"]

        if line.keyword == "row":
            scanner.expect_arity(line, 4)
            bits, eq, rhs = line.tokens[1:]

            if not _BITS_RE.match(bits.text) or len(bits.text) != k:
                raise scanner.error(f"Row must be a bit string of length [{k}], got [{bits.text}]", line, bits)

            if eq.text != "=":
                raise scanner.error(f"Expected [=], got [{eq.text}]", line, eq)

            if rhs.text not in ("0", "1"):
                raise scanner.error(f"Row right hand side [{rhs.text}] is not a bit", line, rhs)

            mask = sum(1 << j for j, ch in enumerate(bits.text) if ch == "1")
            rows.append((mask, int(rhs.text)))

        elif line.keyword == "diag":
            if diag is not None:
                raise scanner.error("Duplicate [diag] line", line)

            scanner.expect_arity(line, k + 1)
            diag = []

            for token in line.tokens[1:]:
                value = scanner.integer(line, token, minimum=0)

                if value > 3:
                    raise scanner.error(f"Diagonal entry [{value}] must be in range 0..3", line, token)

                diag.append(value)

        elif line.keyword == "cross":
            scanner.expect_arity(line, 3)
            j = scanner.integer(line, line.tokens[1], minimum=0)
            l = scanner.integer(line, line.tokens[2], minimum=0)

            if not j < l < k:
                raise scanner.error(f"Cross pair [{j} {l}] must satisfy j < l < [{k}]", line)

            if (j, l) in seen_pairs:
                raise scanner.error(f"Duplicate cross pair [{j} {l}]", line)

            seen_pairs.add((j, l))
            cross[j] |= 1 << l
            cross[l] |= 1 << j

        else:
            raise scanner.error(f"Unknown statement [{line.tokens[0].text}]", line)

    if header is None:
        raise scanner.error("Missing [sig] header")

    if diag is None:
        raise scanner.error("Missing [diag] line")

    if header["zero"]:
        return AffineSignature.zero(header["k"])

    return canonical_signature(header["k"], ExactScalar(header["p"], header["q"]), rows, diag, cross)


def parse_signature_file(path: Union[str, Path]) -> AffineSignature:
    return parse_signature(read_text(path), path)
