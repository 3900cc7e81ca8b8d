"""Exact computations with involutions and normalisers in finite Coxeter groups."""

from __future__ import annotations

from .coxgroup import GroupElement, from_word, length, longest_element
from .errors import ContractError, CoxError, DomainError, InvalidOperandError, SizeExceededError
from .exactfield import FieldSpec, Scalar, minpoly_2cos
from .fvcharacters import conjugacy_classes, fv_character
from .involutions import InvolutionClass, involution_classes, is_special
from .normalizers import bulky_brute, bulky_fast, verify_prop2, verify_theorem1
from .rootsystem import CoxeterType, RootSystem, build, parse_type

__version__ = "0.1.0"

__all__ = [
    "ContractError",
    "CoxError",
    "CoxeterType",
    "DomainError",
    "FieldSpec",
    "GroupElement",
    "InvalidOperandError",
    "InvolutionClass",
    "RootSystem",
    "Scalar",
    "SizeExceededError",
    "build",
    "bulky_brute",
    "bulky_fast",
    "conjugacy_classes",
    "from_word",
    "fv_character",
    "involution_classes",
    "is_special",
    "length",
    "longest_element",
    "minpoly_2cos",
    "parse_type",
    "verify_prop2",
    "verify_theorem1",
]
