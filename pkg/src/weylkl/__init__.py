"""Exact highest-weight combinatorics over finite and affine root systems.

The central pipeline: build a root datum, stratify a rational coweight into
its integral subsystem, and evaluate Kazhdan-Lusztig polynomials into the
Verma-to-simple multiplicity matrix of that stratification, with graded
characters, affine level classifications, diagram foldings, and a
brute-force oracle alongside.
"""

from .rootdata import RationalCoweight, RootDatum, build_root_datum
from .coxeter import CoxeterElement, CoxeterSystem, weyl_system
from .kl import kl_polynomial, kl_table
from .endoscopy import Stratification, stratify
from .multiplicity import multiplicity_matrix
from .affine import AffineCoweight, LevelClass, affine_endoscopy
from .folding import FoldingDatum, fold
from .oracle import oracle_multiplicity_matrix

__version__ = "0.1.0"

__all__ = [
    "AffineCoweight",
    "CoxeterElement",
    "CoxeterSystem",
    "FoldingDatum",
    "LevelClass",
    "RationalCoweight",
    "RootDatum",
    "Stratification",
    "affine_endoscopy",
    "build_root_datum",
    "fold",
    "kl_polynomial",
    "kl_table",
    "multiplicity_matrix",
    "oracle_multiplicity_matrix",
    "stratify",
    "weyl_system",
]
