"""Exact (t,m)-configurations in the real projective plane and their dual plumbed arrangements."""
from __future__ import annotations

from .field import QQ, FieldScalar, FieldSpec
from .projective import Line, Point, join, meet, dualize
from .configuration import Configuration, validate, chamber_sums, chamber_weight
from .combinatorics import combinatorics_of, same_combinatorics, automorphism_group, is_stable
from .dual import PlumbedArrangement, build_dpa, i_invariant, classify_c_leq_3
from .moduli import ModuliParams, moduli_membership, zariski_certificate
from .depth import depth

__version__ = "0.1.0"

__all__ = [
    "QQ", "FieldScalar", "FieldSpec", "Line", "Point", "join", "meet", "dualize",
    "Configuration", "validate", "chamber_sums", "chamber_weight", "combinatorics_of",
    "same_combinatorics", "automorphism_group", "is_stable", "PlumbedArrangement", "build_dpa",
    "i_invariant", "classify_c_leq_3", "ModuliParams", "moduli_membership", "zariski_certificate",
    "depth",
]
