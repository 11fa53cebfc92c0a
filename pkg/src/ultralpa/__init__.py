"""Ideal-structure analysis for Leavitt path algebras of ultragraphs.

The package models finitely presented ultragraphs (named vertices, sink
families, edge bundles with finite or countable multiplicity), computes
their saturated hereditary ideal lattice, and classifies the prime and
primitive ideals of the associated Leavitt path algebra over Q or a prime
field.  A symbolic rewriting engine for fully finite (quotient) graphs
serves as an internal verification oracle.
"""

from .classify import (
    GradedIdealDescriptor,
    NonGradedFamily,
    Report,
    graded_prime_ideals,
    graded_primitive_ideals,
    instantiate,
    nongraded_prime_families,
    spectrum_report,
)
from .errors import UltraLPAError, ValidationError
from .fields import QQ, PrimeField, parse_field
from .gf import build_gf, verify_leavitt_family
from .ideals import (
    AdmissiblePair,
    HSIdeal,
    QuotientUltragraph,
    admissible,
    breaking_vertices,
    build_quotient,
    canonical_class,
    enumerate_hs,
    hs_closure,
    hs_contains,
)
from .laurent import LaurentPoly, is_irreducible, poly
from .lpa import AlgebraElement, LeavittAlgebra, normal_form
from .reach import (
    Loop,
    condition_K,
    condition_L_complement,
    downward_directed_complement,
    geq,
    has_exit_in_complement,
    loops_in_complement,
)
from .setalg import FamilyPart, VSet, combine, in_g0, range_atoms, relate
from .ultragraph import OMEGA, EdgeBundle, Ultragraph, validate

__version__ = "0.1.0"

__all__ = [
    "AdmissiblePair",
    "AlgebraElement",
    "EdgeBundle",
    "FamilyPart",
    "GradedIdealDescriptor",
    "HSIdeal",
    "LaurentPoly",
    "LeavittAlgebra",
    "Loop",
    "NonGradedFamily",
    "OMEGA",
    "PrimeField",
    "QQ",
    "QuotientUltragraph",
    "Report",
    "Ultragraph",
    "UltraLPAError",
    "VSet",
    "ValidationError",
    "admissible",
    "breaking_vertices",
    "build_gf",
    "build_quotient",
    "canonical_class",
    "combine",
    "condition_K",
    "condition_L_complement",
    "downward_directed_complement",
    "enumerate_hs",
    "geq",
    "graded_prime_ideals",
    "graded_primitive_ideals",
    "has_exit_in_complement",
    "hs_closure",
    "hs_contains",
    "in_g0",
    "instantiate",
    "is_irreducible",
    "loops_in_complement",
    "nongraded_prime_families",
    "normal_form",
    "parse_field",
    "poly",
    "range_atoms",
    "relate",
    "spectrum_report",
    "validate",
    "verify_leavitt_family",
]
