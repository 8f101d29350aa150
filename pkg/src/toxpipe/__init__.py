"""Toxicity prediction from 2D structure images.

SMILES in, per-assay activity verdicts out: parse the molecular graph,
render it, push it through a small densely-connected convolutional feature
extractor, classify with an SVM/random-forest/boosted-trees ensemble, and
attach Grad-CAM heatmaps plus a two-part confidence score.
"""

__version__ = "0.1.0"

from .chem import Molecule, parse, tokenize
from .fingerprint import Fingerprint, morgan_fingerprint, tanimoto

__all__ = [
    "Molecule",
    "parse",
    "tokenize",
    "Fingerprint",
    "morgan_fingerprint",
    "tanimoto",
    "__version__",
]
