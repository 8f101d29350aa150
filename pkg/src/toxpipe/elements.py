"""Periodic-table lookups and the SMILES valence model."""

# Elements H (1) through Rn (86); index in this tuple + 1 = atomic number.
SYMBOLS = (
    "H", "He", "Li", "Be", "B", "C", "N", "O", "F", "Ne",
    "Na", "Mg", "Al", "Si", "P", "S", "Cl", "Ar", "K", "Ca",
    "Sc", "Ti", "V", "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn",
    "Ga", "Ge", "As", "Se", "Br", "Kr", "Rb", "Sr", "Y", "Zr",
    "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd", "In", "Sn",
    "Sb", "Te", "I", "Xe", "Cs", "Ba", "La", "Ce", "Pr", "Nd",
    "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb",
    "Lu", "Hf", "Ta", "W", "Re", "Os", "Ir", "Pt", "Au", "Hg",
    "Tl", "Pb", "Bi", "Po", "At", "Rn",
)

ATOMIC_NUMBER = {sym: i + 1 for i, sym in enumerate(SYMBOLS)}

def symbol_of(atomic_number: int) -> str:
    return SYMBOLS[atomic_number - 1]

# Organic subset: atoms writable without brackets.  Two-letter symbols must be
# matched before one-letter ones when tokenizing.
ORGANIC_SYMBOLS = ("Cl", "Br", "B", "C", "N", "O", "P", "S", "F", "I")
ORGANIC_AROMATIC_SYMBOLS = ("b", "c", "n", "o", "p", "s")

# Elements allowed to carry the aromatic flag.
AROMATIC_OK = frozenset(
    ATOMIC_NUMBER[s] for s in ("B", "C", "N", "O", "P", "S", "Se", "As")
)

# Single default valence per organic-subset element, used to fill implicit
# hydrogens: implicit_h = max(0, default - bond_order_sum).
DEFAULT_VALENCE = {
    ATOMIC_NUMBER["B"]: 3,
    ATOMIC_NUMBER["C"]: 4,
    ATOMIC_NUMBER["N"]: 3,
    ATOMIC_NUMBER["O"]: 2,
    ATOMIC_NUMBER["P"]: 3,
    ATOMIC_NUMBER["S"]: 2,
    ATOMIC_NUMBER["F"]: 1,
    ATOMIC_NUMBER["Cl"]: 1,
    ATOMIC_NUMBER["Br"]: 1,
    ATOMIC_NUMBER["I"]: 1,
}

# Upper bound on total connections (bond order sum + hydrogens) per element.
# Permissive for hypervalent nitrogen/phosphorus/sulfur and halogen oxides;
# charge adds |charge| of slack.  Elements absent from the table are not
# checked (exotic bracket atoms take the writer's word).
MAX_VALENCE = {
    ATOMIC_NUMBER["B"]: 3,
    ATOMIC_NUMBER["C"]: 4,
    ATOMIC_NUMBER["N"]: 5,
    ATOMIC_NUMBER["O"]: 3,
    ATOMIC_NUMBER["P"]: 5,
    ATOMIC_NUMBER["S"]: 6,
    ATOMIC_NUMBER["F"]: 1,
    ATOMIC_NUMBER["Cl"]: 7,
    ATOMIC_NUMBER["Br"]: 7,
    ATOMIC_NUMBER["I"]: 7,
    ATOMIC_NUMBER["H"]: 1,
}
