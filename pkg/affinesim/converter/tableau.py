from affinesim.pauli import CliffordTableau


def tableau_to_text(tableau: CliffordTableau) -> str:
    return "\n".join(tableau.format_lines()) + "\n"
