"""Workbench for finite LA-semigroups and bipolar-valued fuzzy ideals."""

from .bvf import BVFSubset, characteristic, compose, gamma, join, leq, meet
from .census import EnumerationTask, canonicalize, enumerate_magmas
from .ideals import Classification, characterize_by_composition, classify
from .kernels import BACKEND
from .magma import Magma, check_law, classify_crisp, find_left_identity, parse_table

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BVFSubset",
    "Classification",
    "EnumerationTask",
    "Magma",
    "canonicalize",
    "characteristic",
    "characterize_by_composition",
    "check_law",
    "classify",
    "classify_crisp",
    "compose",
    "enumerate_magmas",
    "find_left_identity",
    "gamma",
    "join",
    "leq",
    "meet",
    "parse_table",
]
