"""Exception taxonomy shared across the pipeline."""


class ToxpipeError(Exception):
    """Base class for all toxpipe errors."""


# --- SMILES tokenizing / parsing -------------------------------------------

class SmilesError(ToxpipeError, ValueError):
    """Base class for SMILES syntax and chemistry errors."""


class EmptyInput(SmilesError):
    pass


class UnknownCharacter(SmilesError):
    def __init__(self, char: str, position: int):
        super().__init__(f"unknown character {char!r} at position {position}")
        self.char = char
        self.position = position


class UnterminatedBracket(SmilesError):
    def __init__(self, position: int):
        super().__init__(f"'[' at position {position} has no matching ']'")
        self.position = position


class BadBracketAtom(SmilesError):
    def __init__(self, payload: str, detail: str):
        super().__init__(f"malformed bracket atom {payload!r}: {detail}")
        self.payload = payload


class UnknownElement(SmilesError):
    def __init__(self, symbol: str):
        super().__init__(f"unknown element symbol {symbol!r}")
        self.symbol = symbol


class UnclosedRing(SmilesError):
    def __init__(self, digit: int):
        super().__init__(f"ring closure {digit} opened but never closed")
        self.digit = digit


class RingBondMismatch(SmilesError):
    def __init__(self, digit: int):
        super().__init__(f"conflicting bond orders on ring closure {digit}")
        self.digit = digit


class UnmatchedBranch(SmilesError):
    pass


class DanglingBond(SmilesError):
    pass


class DuplicateBond(SmilesError):
    def __init__(self, i: int, j: int):
        super().__init__(f"more than one bond between atoms {i} and {j}")
        self.pair = (i, j)


class ValenceViolation(SmilesError):
    def __init__(self, atom_index: int, detail: str = ""):
        msg = f"valence violation at atom {atom_index}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.atom_index = atom_index


# --- fingerprints -----------------------------------------------------------

class EmptyMolecule(ToxpipeError, ValueError):
    pass


class LengthMismatch(ToxpipeError, ValueError):
    pass


# --- depiction ---------------------------------------------------------------

class LayoutOverlap(ToxpipeError, RuntimeError):
    """Greedy placement could not avoid coincident atoms."""


class DegenerateExtent(ToxpipeError, RuntimeError):
    """Raster extent collapsed in a way that cannot be drawn."""


# --- tensor / network --------------------------------------------------------

class ShapeMismatch(ToxpipeError, ValueError):
    pass


class DegenerateBatch(ToxpipeError, ValueError):
    """Training-mode batch norm needs at least 2 elements per channel."""


class OddSpatialDim(ToxpipeError, ValueError):
    pass


class NoRecordedGraph(ToxpipeError, RuntimeError):
    pass


class EmptyDataset(ToxpipeError, ValueError):
    pass


# --- explanation -------------------------------------------------------------

class UntrainedHead(ToxpipeError, RuntimeError):
    pass


class InvalidLabel(ToxpipeError, ValueError):
    pass


class DimMismatch(ToxpipeError, ValueError):
    pass


# --- ensemble ----------------------------------------------------------------

class SingleClassLabel(ToxpipeError, ValueError):
    """Fewer than 2 samples of one class for a label."""


class UntrainedLabel(ToxpipeError, RuntimeError):
    def __init__(self, assay: str):
        super().__init__(f"no fitted classifier for assay {assay!r}")
        self.assay = assay


class NoVoters(ToxpipeError, RuntimeError):
    pass


class TooFewRuns(ToxpipeError, ValueError):
    pass


class BadWeights(ToxpipeError, ValueError):
    pass


# --- dataset / persistence ----------------------------------------------------

class MissingSmilesColumn(ToxpipeError, ValueError):
    pass


class NoAssayColumns(ToxpipeError, ValueError):
    pass


class MalformedRow(ToxpipeError, ValueError):
    def __init__(self, line_number: int, detail: str = ""):
        msg = f"malformed row at line {line_number}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.line_number = line_number


class BadFractions(ToxpipeError, ValueError):
    pass


class NoEvaluableRecords(ToxpipeError, ValueError):
    def __init__(self, assay: str):
        super().__init__(f"no evaluable records for assay {assay!r}")
        self.assay = assay


class ParseFailure(ToxpipeError, ValueError):
    pass


class BundleCorrupt(ToxpipeError, RuntimeError):
    pass


class ChecksumMismatch(BundleCorrupt):
    pass


class VersionUnsupported(BundleCorrupt):
    pass


class TruncatedFile(BundleCorrupt):
    pass
