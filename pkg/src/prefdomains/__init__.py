"""Exact recognition of single-peaked, single-crossing and one-dimensional Euclidean profiles."""

from .axes import SPWitness, enumerate_axes, find_sp_obstruction, is_single_peaked_on
from .crossing import SCWitness, find_sc_obstruction, find_sc_order, is_single_crossing_on
from .euclid import (
    Embedding,
    Mode,
    Status,
    build_constraints,
    induced_ranking,
    recognize_euclidean,
    verify_embedding,
)
from .exactlp import HomogeneousSystem, check_certificate, check_witness, feasible_strict
from .prefcore import Profile, ProfileError, delete_voter, parse_profile, serialize_profile

__version__ = "0.1.0"
