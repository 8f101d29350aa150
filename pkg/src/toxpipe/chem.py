"""SMILES tokenizer and parser producing validated molecular graphs.

Scope: the organic subset plus arbitrary bracket atoms (H..Rn), ring
closures (including %nn), branches, charges, isotopes and explicit H counts.
Stereo markers (/ \\ @ @@) are accepted and discarded.  Dot-separated inputs
are desalted down to the fragment with the most heavy atoms.  No kekulization
and no aromaticity perception: lowercase input is trusted as aromatic.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field

from .elements import (
    AROMATIC_OK,
    ATOMIC_NUMBER,
    DEFAULT_VALENCE,
    MAX_VALENCE,
    symbol_of,
)
from .errors import (
    BadBracketAtom,
    DanglingBond,
    DuplicateBond,
    EmptyInput,
    RingBondMismatch,
    UnclosedRing,
    UnknownCharacter,
    UnknownElement,
    UnmatchedBranch,
    UnterminatedBracket,
    ValenceViolation,
)


class TokenKind(enum.Enum):
    ATOM_ORGANIC = "AtomOrganic"
    ATOM_BRACKET = "AtomBracket"
    BOND = "Bond"
    RING_CLOSURE = "RingClosureDigit"
    BRANCH_OPEN = "BranchOpen"
    BRANCH_CLOSE = "BranchClose"
    DOT = "Dot"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    payload: str
    position: int


class BondOrder(enum.Enum):
    SINGLE = 1
    DOUBLE = 2
    TRIPLE = 3
    AROMATIC = 4

    @property
    def valence_units(self) -> int:
        """Contribution to an atom's bond order sum (aromatic counts 1)."""
        return 1 if self is BondOrder.AROMATIC else self.value


@dataclass
class Atom:
    element: int
    aromatic: bool = False
    formal_charge: int = 0
    explicit_h: int | None = None  # None for organic-subset atoms
    isotope: int | None = None
    index: int = -1

    @property
    def symbol(self) -> str:
        return symbol_of(self.element)


@dataclass(frozen=True)
class Bond:
    i: int
    j: int
    order: BondOrder

    def other(self, idx: int) -> int:
        return self.j if idx == self.i else self.i


@dataclass
class Molecule:
    atoms: list[Atom]
    bonds: list[Bond]
    ring_membership: list[bool] = field(default_factory=list)
    implicit_h: list[int] = field(default_factory=list)
    n_fragments: int = 1  # fragment count of the original input

    def __len__(self) -> int:
        return len(self.atoms)

    def neighbors(self, i: int) -> list[tuple[int, Bond]]:
        out = []
        for b in self.bonds:
            if b.i == i:
                out.append((b.j, b))
            elif b.j == i:
                out.append((b.i, b))
        return out

    def adjacency(self) -> list[list[tuple[int, Bond]]]:
        adj: list[list[tuple[int, Bond]]] = [[] for _ in self.atoms]
        for b in self.bonds:
            adj[b.i].append((b.j, b))
            adj[b.j].append((b.i, b))
        return adj

    def total_h(self, i: int) -> int:
        a = self.atoms[i]
        return a.explicit_h if a.explicit_h is not None else self.implicit_h[i]

    def degree(self, i: int) -> int:
        return sum(1 for b in self.bonds if i in (b.i, b.j))


_BOND_CHARS = {
    "-": BondOrder.SINGLE,
    "=": BondOrder.DOUBLE,
    "#": BondOrder.TRIPLE,
    ":": BondOrder.AROMATIC,
    "/": BondOrder.SINGLE,   # stereo direction discarded
    "\\": BondOrder.SINGLE,
}


def tokenize(smiles: str) -> list[Token]:
    """Split a SMILES string into tokens.

    The concatenation of token payloads reproduces the input exactly.
    """
    if not smiles:
        raise EmptyInput("empty SMILES")
    if not smiles.isascii():
        bad = next(i for i, ch in enumerate(smiles) if not ch.isascii())
        raise UnknownCharacter(smiles[bad], bad)

    tokens: list[Token] = []
    i, n = 0, len(smiles)
    while i < n:
        ch = smiles[i]
        if ch == "[":
            end = smiles.find("]", i + 1)
            if end < 0:
                raise UnterminatedBracket(i)
            tokens.append(Token(TokenKind.ATOM_BRACKET, smiles[i : end + 1], i))
            i = end + 1
        elif smiles.startswith(("Cl", "Br"), i):
            tokens.append(Token(TokenKind.ATOM_ORGANIC, smiles[i : i + 2], i))
            i += 2
        elif ch in "BCNOPSFI" or ch in "bcnops":
            tokens.append(Token(TokenKind.ATOM_ORGANIC, ch, i))
            i += 1
        elif ch in _BOND_CHARS:
            tokens.append(Token(TokenKind.BOND, ch, i))
            i += 1
        elif ch.isdigit():
            tokens.append(Token(TokenKind.RING_CLOSURE, ch, i))
            i += 1
        elif ch == "%":
            if i + 2 >= n or not smiles[i + 1 : i + 3].isdigit():
                raise UnknownCharacter(ch, i)
            tokens.append(Token(TokenKind.RING_CLOSURE, smiles[i : i + 3], i))
            i += 3
        elif ch == "(":
            tokens.append(Token(TokenKind.BRANCH_OPEN, ch, i))
            i += 1
        elif ch == ")":
            tokens.append(Token(TokenKind.BRANCH_CLOSE, ch, i))
            i += 1
        elif ch == ".":
            tokens.append(Token(TokenKind.DOT, ch, i))
            i += 1
        else:
            raise UnknownCharacter(ch, i)
    return tokens


_BRACKET_RE = re.compile(
    r"""\[
    (?P<isotope>\d+)?
    (?P<symbol>[A-Z][a-z]?|[a-z]{1,2})
    (?P<chiral>@{1,2}[A-Z]{0,2}\d*)?
    (?P<hcount>H\d*)?
    (?P<charge>\+{1,2}|-{1,2}|\+\d+|-\d+)?
    (?::(?P<cls>\d+))?
    \]$""",
    re.VERBOSE,
)


def _parse_bracket(payload: str) -> Atom:
    m = _BRACKET_RE.match(payload)
    if m is None:
        raise BadBracketAtom(payload, "does not match bracket-atom grammar")
    sym = m.group("symbol")
    aromatic = sym[0].islower()
    lookup = sym.capitalize() if aromatic else sym
    element = ATOMIC_NUMBER.get(lookup)
    if element is None:
        raise UnknownElement(sym)
    if aromatic and element not in AROMATIC_OK:
        raise UnknownElement(sym)

    hcount = 0
    if m.group("hcount"):
        digits = m.group("hcount")[1:]
        hcount = int(digits) if digits else 1

    charge = 0
    if m.group("charge"):
        c = m.group("charge")
        if c in ("++", "--"):
            charge = 2 if c == "++" else -2
        elif len(c) == 1:
            charge = 1 if c == "+" else -1
        else:
            charge = int(c)

    isotope = int(m.group("isotope")) if m.group("isotope") else None
    return Atom(
        element=element,
        aromatic=aromatic,
        formal_charge=charge,
        explicit_h=hcount,
        isotope=isotope,
    )


def _parse_organic(payload: str) -> Atom:
    # the tokenizer only emits organic-subset payloads, so no validation here
    aromatic = payload.islower()
    sym = payload.capitalize() if aromatic else payload
    return Atom(element=ATOMIC_NUMBER[sym], aromatic=aromatic)


def implicit_hydrogen_count(atom: Atom, bond_order_sum: int) -> int:
    """Hydrogens to add to an organic-subset atom under the default valence."""
    default = DEFAULT_VALENCE[atom.element]
    return max(0, default - bond_order_sum)


def bond_order_sum(mol_or_adj, i: int, atoms: list[Atom] | None = None) -> int:
    """Sum of bond valence units at atom i, with the Kekulé-free aromatic rule:
    each aromatic bond counts 1, plus 1 extra if the atom itself is aromatic."""
    if isinstance(mol_or_adj, Molecule):
        nbrs = mol_or_adj.neighbors(i)
        atom = mol_or_adj.atoms[i]
    else:
        nbrs = mol_or_adj[i]
        atom = atoms[i]
    total = sum(b.order.valence_units for _, b in nbrs)
    if atom.aromatic and any(b.order is BondOrder.AROMATIC for _, b in nbrs):
        total += 1
    return total


def parse(smiles: str) -> Molecule:
    """Parse a SMILES string into a Molecule.

    Multi-fragment inputs keep only the fragment with the most heavy atoms
    (desalting); the original fragment count is recorded on the result.
    """
    tokens = tokenize(smiles)

    atoms: list[Atom] = []
    bonds: list[Bond] = []
    bond_keys: set[tuple[int, int]] = set()
    prev: int | None = None
    stack: list[int | None] = []
    pending: str | None = None  # explicit bond char waiting for its target
    open_rings: dict[int, tuple[int, str | None, int]] = {}  # digit -> (atom, bondchar, pos)

    def add_bond(i: int, j: int, order: BondOrder):
        if i == j:
            raise DuplicateBond(i, j)
        key = (min(i, j), max(i, j))
        if key in bond_keys:
            raise DuplicateBond(i, j)
        bond_keys.add(key)
        bonds.append(Bond(i, j, order))

    def resolve_order(char: str | None, i: int, j: int) -> BondOrder:
        if char is not None:
            return _BOND_CHARS[char]
        if atoms[i].aromatic and atoms[j].aromatic:
            return BondOrder.AROMATIC
        return BondOrder.SINGLE

    for tok in tokens:
        if tok.kind in (TokenKind.ATOM_ORGANIC, TokenKind.ATOM_BRACKET):
            atom = (
                _parse_bracket(tok.payload)
                if tok.kind is TokenKind.ATOM_BRACKET
                else _parse_organic(tok.payload)
            )
            atom.index = len(atoms)
            atoms.append(atom)
            if prev is not None:
                add_bond(prev, atom.index, resolve_order(pending, prev, atom.index))
            elif pending is not None:
                raise DanglingBond(f"bond {pending!r} has no preceding atom")
            pending = None
            prev = atom.index
        elif tok.kind is TokenKind.BOND:
            if prev is None or pending is not None:
                raise DanglingBond(f"unexpected bond {tok.payload!r} at {tok.position}")
            pending = tok.payload
        elif tok.kind is TokenKind.RING_CLOSURE:
            if prev is None:
                raise DanglingBond(f"ring closure at {tok.position} has no atom")
            digit = int(tok.payload.lstrip("%"))
            if digit in open_rings:
                open_atom, open_char, _ = open_rings.pop(digit)
                if open_char is not None and pending is not None and open_char != pending:
                    raise RingBondMismatch(digit)
                char = pending if pending is not None else open_char
                add_bond(open_atom, prev, resolve_order(char, open_atom, prev))
            else:
                open_rings[digit] = (prev, pending, tok.position)
            pending = None
        elif tok.kind is TokenKind.BRANCH_OPEN:
            if prev is None:
                raise UnmatchedBranch(f"branch opened at {tok.position} without an atom")
            if pending is not None:
                raise DanglingBond(f"bond before '(' at {tok.position}")
            stack.append(prev)
        elif tok.kind is TokenKind.BRANCH_CLOSE:
            if not stack:
                raise UnmatchedBranch(f"')' at {tok.position} closes nothing")
            if pending is not None:
                raise DanglingBond(f"bond before ')' at {tok.position}")
            prev = stack.pop()
        elif tok.kind is TokenKind.DOT:
            if pending is not None:
                raise DanglingBond(f"bond before '.' at {tok.position}")
            prev = None

    if pending is not None:
        raise DanglingBond("trailing bond character")
    if stack:
        raise UnmatchedBranch("unclosed '('")
    if open_rings:
        digit = min(open_rings, key=lambda d: open_rings[d][2])
        raise UnclosedRing(digit)
    if not atoms:
        raise EmptyInput("no atoms in SMILES")

    mol = Molecule(atoms=atoms, bonds=bonds)
    mol = _keep_largest_fragment(mol)
    mol.ring_membership = _ring_membership(mol)
    _assign_hydrogens(mol)
    return mol


def _components(mol: Molecule) -> list[list[int]]:
    adj = mol.adjacency()
    seen = [False] * len(mol.atoms)
    comps = []
    for start in range(len(mol.atoms)):
        if seen[start]:
            continue
        comp, queue = [], [start]
        seen[start] = True
        while queue:
            u = queue.pop()
            comp.append(u)
            for v, _ in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def _keep_largest_fragment(mol: Molecule) -> Molecule:
    comps = _components(mol)
    if len(comps) == 1:
        return mol
    heavy = [sum(1 for i in c if mol.atoms[i].element > 1) for c in comps]
    best = comps[max(range(len(comps)), key=lambda k: (heavy[k], -k))]
    keep = set(best)
    remap = {old: new for new, old in enumerate(best)}
    atoms = []
    for old in best:
        a = mol.atoms[old]
        a.index = remap[old]
        atoms.append(a)
    bonds = [
        Bond(remap[b.i], remap[b.j], b.order)
        for b in mol.bonds
        if b.i in keep and b.j in keep
    ]
    return Molecule(atoms=atoms, bonds=bonds, n_fragments=len(comps))


def bridge_flags(mol: Molecule) -> list[bool]:
    """Per-bond flag: True when the bond is a bridge (not on any cycle)."""
    n = len(mol.atoms)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e, b in enumerate(mol.bonds):
        adj[b.i].append((b.j, e))
        adj[b.j].append((b.i, e))

    disc = [-1] * n
    low = [0] * n
    is_bridge = [False] * len(mol.bonds)
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # iterative DFS frames: (node, parent edge, neighbor iterator index)
        stack = [(root, -1, 0)]
        while stack:
            u, pe, it = stack[-1]
            if it < len(adj[u]):
                stack[-1] = (u, pe, it + 1)
                v, e = adj[u][it]
                if e == pe:
                    continue
                if disc[v] == -1:
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, e, 0))
                else:
                    low[u] = min(low[u], disc[v])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if low[u] > disc[p]:
                        is_bridge[pe] = True
    return is_bridge


def _ring_membership(mol: Molecule) -> list[bool]:
    """An atom is in a ring iff it touches a non-bridge edge."""
    in_ring = [False] * len(mol.atoms)
    for b, bridge in zip(mol.bonds, bridge_flags(mol)):
        if not bridge:
            in_ring[b.i] = True
            in_ring[b.j] = True
    return in_ring


def _assign_hydrogens(mol: Molecule) -> None:
    adj = mol.adjacency()
    implicit = []
    for i, atom in enumerate(mol.atoms):
        bos = bond_order_sum(adj, i, mol.atoms)
        if atom.explicit_h is None:
            h = implicit_hydrogen_count(atom, bos)
            implicit.append(h)
        else:
            h = atom.explicit_h
            implicit.append(0)
        limit = MAX_VALENCE.get(atom.element)
        if limit is not None:
            if bos + h > limit + abs(atom.formal_charge):
                raise ValenceViolation(
                    i, f"{atom.symbol}: bond order sum {bos} + {h} H exceeds {limit}"
                )
    mol.implicit_h = implicit


def ring_bond_flags(mol: Molecule) -> list[bool]:
    """Per-bond flag: True when the bond lies on a cycle."""
    return [not bridge for bridge in bridge_flags(mol)]


def format_adjacency(mol: Molecule) -> str:
    """Adjacency listing: one atom per line, then one bond per line."""
    lines = []
    for i, a in enumerate(mol.atoms):
        sym = a.symbol.lower() if a.aromatic else a.symbol
        lines.append(f"{i} {sym} {a.formal_charge:+d} {mol.total_h(i)}")
    for b in mol.bonds:
        lines.append(f"{b.i} {b.j} {b.order.name.lower()}")
    return "\n".join(lines)
