"""Morgan (ECFP) circular fingerprints over parsed molecules.

The hash combiner is fixed (FNV-1a folded through the MurmurHash3 32-bit
finalizer), so fingerprints are bit-identical across processes and platforms.
Defaults give ECFP4: radius 2, 2048 bits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chem import Bond, BondOrder, Molecule
from .errors import EmptyMolecule, LengthMismatch

_M32 = 0xFFFFFFFF
_FNV_OFFSET = 0x811C9DC5
_FNV_PRIME = 0x01000193


def mix32(h: int) -> int:
    """MurmurHash3 32-bit finalizer (avalanche step)."""
    h &= _M32
    h ^= h >> 16
    h = (h * 0x85EBCA6B) & _M32
    h ^= h >> 13
    h = (h * 0xC2B2AE35) & _M32
    h ^= h >> 16
    return h


def hash_ints(values) -> int:
    """Order-sensitive 32-bit hash of an integer sequence."""
    h = _FNV_OFFSET
    for v in values:
        h = ((h ^ (v & _M32)) * _FNV_PRIME) & _M32
    return mix32(h)


@dataclass
class Fingerprint:
    bits: np.ndarray  # bool vector of length nbits
    nbits: int = 2048
    radius: int = 2

    def __post_init__(self):
        if self.nbits < 1 or self.nbits & (self.nbits - 1):
            raise ValueError(f"nbits must be a power of two, got {self.nbits}")
        self.bits = np.asarray(self.bits, dtype=bool)
        if self.bits.shape != (self.nbits,):
            raise LengthMismatch(f"expected {self.nbits} bits, got {self.bits.shape}")

    def count(self) -> int:
        return int(self.bits.sum())

    def on_bits(self) -> list[int]:
        return np.flatnonzero(self.bits).tolist()

    def to_hex(self) -> str:
        """Hex encoding, MSB-first within each byte (bit 0 is the top bit)."""
        return np.packbits(self.bits).tobytes().hex()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Fingerprint)
            and self.nbits == other.nbits
            and bool(np.array_equal(self.bits, other.bits))
        )


_BOND_CODE = {
    BondOrder.SINGLE: 1,
    BondOrder.DOUBLE: 2,
    BondOrder.TRIPLE: 3,
    BondOrder.AROMATIC: 4,
}


def atom_invariant(mol: Molecule, index: int, adjacency=None) -> int:
    """Initial 32-bit environment code of one atom.

    Hashes (element, heavy degree, total H, formal charge, ring flag,
    aromatic flag); equal tuples give equal codes in any process.
    """
    nbrs = adjacency[index] if adjacency is not None else mol.neighbors(index)
    a = mol.atoms[index]
    return hash_ints(
        (
            a.element,
            len(nbrs),
            mol.total_h(index),
            a.formal_charge,
            int(mol.ring_membership[index]),
            int(a.aromatic),
        )
    )


def environment_ids(mol: Molecule, radius: int) -> list[int]:
    """All environment identifiers for radii 0..radius, before deduplication.

    Identifiers for radius r+1 extend the radius-r list, so the cumulative
    set is monotone in the radius.  Atoms with no neighbors keep their
    previous identifier (their environment cannot grow).
    """
    if not mol.atoms:
        raise EmptyMolecule("cannot fingerprint an empty molecule")
    adj = mol.adjacency()
    ids = [atom_invariant(mol, i, adj) for i in range(len(mol.atoms))]
    out = list(ids)
    for r in range(1, radius + 1):
        nxt = []
        for i in range(len(mol.atoms)):
            pairs = sorted((_BOND_CODE[b.order], ids[j]) for j, b in adj[i])
            if not pairs:
                nxt.append(ids[i])
                continue
            flat = [r, ids[i]]
            for code, nid in pairs:
                flat.append(code)
                flat.append(nid)
            nxt.append(hash_ints(flat))
        ids = nxt
        out.extend(ids)
    return out


def morgan_fingerprint(mol: Molecule, radius: int = 2, nbits: int = 2048) -> Fingerprint:
    """Fold the deduplicated environment identifiers into a bit vector."""
    bits = np.zeros(nbits, dtype=bool)
    for ident in set(environment_ids(mol, radius)):
        bits[ident % nbits] = True
    return Fingerprint(bits=bits, nbits=nbits, radius=radius)


def tanimoto(a: Fingerprint, b: Fingerprint) -> float:
    """Intersection over union of two bit vectors; 1.0 when both are empty."""
    if a.nbits != b.nbits:
        raise LengthMismatch(f"nbits differ: {a.nbits} vs {b.nbits}")
    union = int(np.logical_or(a.bits, b.bits).sum())
    if union == 0:
        return 1.0
    inter = int(np.logical_and(a.bits, b.bits).sum())
    return inter / union
