from affinesim.f2core import BitVec, iter_bits
from affinesim.signature import AffineSignature


def signature_to_text(f: AffineSignature) -> str:
    """Canonical record, parse_signature(signature_to_text(f)) == f"""
    k = f.arity
    lines = [f"sig k={k} p={f.scalar.p} q={f.scalar.q} zero={int(f.is_zero)}"]

    for _, mask, rhs in f.support.rows():
        lines.append(f"row {BitVec(k, mask).to_string()} = {rhs}")

    lines.append(" ".join(["diag"] + [str(v) for v in f.phase.diag]))

    for j, row in enumerate(f.phase.cross):
        for l in iter_bits(row):
            if j < l:
                lines.append(f"cross {j} {l}")

    return "\n".join(lines) + "\n"
