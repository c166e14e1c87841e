"""Exact numerical K-theory of Fano threefolds with Picard group Z."""

from .chow import CycleClass, ParentMismatchError, dual, mul, top_degree
from .ktheory import (
    EulerGram,
    KClass,
    LatticeMembershipError,
    chi0,
    euler,
    lattice_coordinates,
    mukai_ch,
    structure_sheaf,
    todd,
)
from .registry import ClassificationError, FanoDescriptor, all_descriptors, describe, validate

__version__ = "0.1.0"

__all__ = [
    "ClassificationError",
    "CycleClass",
    "EulerGram",
    "FanoDescriptor",
    "KClass",
    "LatticeMembershipError",
    "ParentMismatchError",
    "all_descriptors",
    "chi0",
    "describe",
    "dual",
    "euler",
    "lattice_coordinates",
    "mukai_ch",
    "mul",
    "structure_sheaf",
    "todd",
    "top_degree",
    "validate",
]
