import pytest
from hypothesis import given, strategies as st

from toxpipe import errors
from toxpipe.chem import (
    BondOrder,
    TokenKind,
    bond_order_sum,
    format_adjacency,
    implicit_hydrogen_count,
    parse,
    tokenize,
)


class TestTokenize:
    def test_single_atom(self):
        toks = tokenize("C")
        assert len(toks) == 1
        assert toks[0].kind is TokenKind.ATOM_ORGANIC
        assert toks[0].payload == "C"

    def test_benzene_eight_tokens(self):
        toks = tokenize("c1ccccc1")
        assert len(toks) == 8
        kinds = [t.kind for t in toks]
        assert kinds.count(TokenKind.ATOM_ORGANIC) == 6
        assert kinds.count(TokenKind.RING_CLOSURE) == 2
        assert all(t.payload == "1" for t in toks if t.kind is TokenKind.RING_CLOSURE)

    def test_branch_and_bond(self):
        toks = tokenize("C(=O)O")
        assert [t.kind for t in toks] == [
            TokenKind.ATOM_ORGANIC,
            TokenKind.BRANCH_OPEN,
            TokenKind.BOND,
            TokenKind.ATOM_ORGANIC,
            TokenKind.BRANCH_CLOSE,
            TokenKind.ATOM_ORGANIC,
        ]
        assert len(toks) == 6

    def test_two_letter_elements(self):
        toks = tokenize("ClCCBr")
        assert [t.payload for t in toks] == ["Cl", "C", "C", "Br"]

    def test_bracket_is_one_token(self):
        toks = tokenize("[NH4+]")
        assert len(toks) == 1
        assert toks[0].kind is TokenKind.ATOM_BRACKET

    def test_percent_ring_closure(self):
        toks = tokenize("C%12CC%12")
        ring = [t for t in toks if t.kind is TokenKind.RING_CLOSURE]
        assert [t.payload for t in ring] == ["%12", "%12"]

    def test_positions_strictly_increase(self):
        toks = tokenize("CC(=O)Oc1ccccc1C(=O)O")
        positions = [t.position for t in toks]
        assert positions == sorted(positions)
        assert len(set(positions)) == len(positions)

    def test_empty_input(self):
        with pytest.raises(errors.EmptyInput):
            tokenize("")

    def test_unknown_character(self):
        with pytest.raises(errors.UnknownCharacter) as e:
            tokenize("CC?C")
        assert e.value.position == 2

    def test_unterminated_bracket(self):
        with pytest.raises(errors.UnterminatedBracket):
            tokenize("C[NH2")

    @pytest.mark.parametrize(
        "smi",
        [
            "C", "CCO", "c1ccccc1", "CC(=O)Oc1ccccc1C(=O)O", "[NH4+].[Cl-]",
            "C/C=C/C", "N#Cc1ccc(Br)cc1", "C%10CCC%10", "[13CH4]", "S=C=S",
        ],
    )
    def test_round_trip_payloads(self, smi):
        assert "".join(t.payload for t in tokenize(smi)) == smi

    @given(st.text(alphabet="CNOPSFIcnos()=#123[]+-H@/\\.%Brl", max_size=30))
    def test_round_trip_or_clean_error(self, smi):
        try:
            toks = tokenize(smi)
        except errors.SmilesError:
            return
        assert "".join(t.payload for t in toks) == smi


class TestParse:
    def test_methane(self):
        mol = parse("C")
        assert len(mol.atoms) == 1
        assert not mol.bonds
        assert mol.implicit_h == [4]

    def test_cyclopropane(self):
        mol = parse("C1CC1")
        assert len(mol.atoms) == 3
        assert len(mol.bonds) == 3
        assert mol.ring_membership == [True, True, True]

    def test_acetic_acid(self):
        mol = parse("CC(=O)O")
        assert len(mol.atoms) == 4
        assert sorted(b.order.name for b in mol.bonds) == ["DOUBLE", "SINGLE", "SINGLE"]
        assert mol.implicit_h == [3, 0, 0, 1]

    def test_atom_order_is_traversal_order(self):
        mol = parse("OC=N")
        assert [a.symbol for a in mol.atoms] == ["O", "C", "N"]

    def test_unclosed_ring(self):
        with pytest.raises(errors.UnclosedRing) as e:
            parse("C1CC")
        assert e.value.digit == 1

    def test_unmatched_branch(self):
        with pytest.raises(errors.UnmatchedBranch):
            parse("CC(C")
        with pytest.raises(errors.UnmatchedBranch):
            parse("CC)C")

    def test_valence_violation(self):
        with pytest.raises(errors.ValenceViolation) as e:
            parse("CC(C)(C)(C)C")
        assert e.value.atom_index == 1

    def test_unknown_element_in_bracket(self):
        with pytest.raises(errors.UnknownElement):
            parse("[Xx]")

    def test_aromatic_flags_and_hydrogens(self):
        mol = parse("c1ccccc1")
        assert all(a.aromatic for a in mol.atoms)
        assert mol.implicit_h == [1] * 6
        assert all(b.order is BondOrder.AROMATIC for b in mol.bonds)

    def test_pyridine_nitrogen_has_no_h(self):
        mol = parse("c1ccncc1")
        n_idx = next(i for i, a in enumerate(mol.atoms) if a.symbol == "N")
        assert mol.implicit_h[n_idx] == 0

    def test_pyrrole_explicit_h(self):
        mol = parse("c1cc[nH]c1")
        n_idx = next(i for i, a in enumerate(mol.atoms) if a.symbol == "N")
        assert mol.atoms[n_idx].explicit_h == 1
        assert mol.total_h(n_idx) == 1

    def test_charges_and_isotopes(self):
        mol = parse("[13C][O-]")
        assert mol.atoms[0].isotope == 13
        assert mol.atoms[1].formal_charge == -1

    def test_charge_separated_nitro(self):
        mol = parse("C[N+](=O)[O-]")
        n = mol.atoms[1]
        assert n.formal_charge == 1
        assert n.explicit_h == 0

    def test_desalting_keeps_largest_fragment(self):
        mol = parse("CCO.[Na+]")
        assert [a.symbol for a in mol.atoms] == ["C", "C", "O"]
        assert mol.n_fragments == 2

    def test_ring_closure_bond_order(self):
        mol = parse("C=1CCCCC=1")
        closure = next(b for b in mol.bonds if {b.i, b.j} == {0, 5})
        assert closure.order is BondOrder.DOUBLE

    def test_ring_closure_order_mismatch(self):
        with pytest.raises(errors.RingBondMismatch):
            parse("C=1CCCCC#1")

    def test_duplicate_bond_rejected(self):
        with pytest.raises(errors.DuplicateBond):
            parse("C12CC12")

    def test_stereo_markers_discarded(self):
        mol = parse("C/C=C\\C")
        assert len(mol.bonds) == 3
        orders = sorted(b.order.name for b in mol.bonds)
        assert orders == ["DOUBLE", "SINGLE", "SINGLE"]
        chiral = parse("N[C@@H](C)C(=O)O")
        assert len(chiral.atoms) == 6

    def test_dot_inside_ring_digits_merges(self):
        # two "fragments" joined by a ring-closure bond form one component
        mol = parse("C1.C1")
        assert len(mol.bonds) == 1
        assert mol.n_fragments == 1

    def test_fused_rings_membership(self):
        mol = parse("c1ccc2ccccc2c1")
        assert all(mol.ring_membership)
        mol2 = parse("C1CC1CC")
        assert mol2.ring_membership == [True, True, True, False, False]

    def test_parse_determinism(self):
        a, b = parse("CC(=O)Oc1ccccc1"), parse("CC(=O)Oc1ccccc1")
        assert [x.element for x in a.atoms] == [x.element for x in b.atoms]
        assert [(x.i, x.j, x.order) for x in a.bonds] == [(x.i, x.j, x.order) for x in b.bonds]
        assert a.implicit_h == b.implicit_h


class TestImplicitHydrogens:
    @pytest.mark.parametrize(
        "smi,expected",
        [("C", 4), ("N", 3), ("O", 2), ("S", 2), ("P", 3), ("B", 3),
         ("F", 1), ("Cl", 1), ("Br", 1), ("I", 1)],
    )
    def test_lone_atom_defaults(self, smi, expected):
        assert parse(smi).implicit_h == [expected]

    def test_counting_rule_direct(self):
        from toxpipe.chem import Atom
        from toxpipe.elements import ATOMIC_NUMBER
        assert implicit_hydrogen_count(Atom(element=ATOMIC_NUMBER["C"]), 0) == 4
        assert implicit_hydrogen_count(Atom(element=ATOMIC_NUMBER["N"]), 1) == 2
        assert implicit_hydrogen_count(Atom(element=ATOMIC_NUMBER["O"]), 2) == 0

    def test_valence_soundness_property(self):
        from toxpipe.elements import MAX_VALENCE
        for smi in ["CC(=O)O", "c1ccccc1", "C#N", "S(=O)(=O)O", "c1cc[nH]c1",
                    "CCN(CC)CC", "O=C1CCCCC1", "FC(F)(F)c1ccccc1"]:
            mol = parse(smi)
            for i, atom in enumerate(mol.atoms):
                total = bond_order_sum(mol, i) + mol.total_h(i)
                limit = MAX_VALENCE.get(atom.element)
                if limit is not None:
                    assert total <= limit + abs(atom.formal_charge), (smi, i)


def test_format_adjacency():
    out = format_adjacency(parse("CC(=O)O"))
    lines = out.splitlines()
    assert lines[0] == "0 C +0 3"
    assert lines[4] == "0 1 single"
    assert lines[5] == "1 2 double"
