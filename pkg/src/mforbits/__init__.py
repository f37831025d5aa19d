"""Strongly orthogonal noncompact weights and the geometry of the associated
multiplicity-free nilpotent orbits for classical real Lie groups."""

from mforbits.errors import (
    ConformanceError,
    ContractError,
    MforbitsError,
    ParameterError,
    ResourceError,
    UnsupportedError,
)
from mforbits.pairs import FamilyId, SymmetricPair, build_pair, highest_noncompact_weight
from mforbits.rootsys import RootSystemK, Weight, inner, is_dominant, weyl_dim, weyl_orbit
from mforbits.soseq import SOSequence, maximal_sequences, sequence_branches
from mforbits.restricted import RestrictedSystem, restrict, signature_string, qrs_constants
from mforbits.hilbert import degree_brute_force, degree_closed, hilbert_polynomial, hilbert_value

__all__ = [
    "ConformanceError",
    "ContractError",
    "FamilyId",
    "MforbitsError",
    "ParameterError",
    "ResourceError",
    "RestrictedSystem",
    "RootSystemK",
    "SOSequence",
    "SymmetricPair",
    "UnsupportedError",
    "Weight",
    "build_pair",
    "degree_brute_force",
    "degree_closed",
    "highest_noncompact_weight",
    "hilbert_polynomial",
    "hilbert_value",
    "inner",
    "is_dominant",
    "maximal_sequences",
    "qrs_constants",
    "restrict",
    "sequence_branches",
    "signature_string",
    "weyl_dim",
    "weyl_orbit",
]
