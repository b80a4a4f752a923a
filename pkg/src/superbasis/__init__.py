"""Exact Gelfand-Tsetlin bases and generator matrices for unitary gl(m|n) modules."""

from .radicals import RadicalSum, sqrt_of_rational
from .weights import Signature, UnitaryClass, UnitaryKind, Weight, classify, parse_signature, parse_weight
from .patterns import GTPattern, enumerate_basis, validate, weight_of
from .duality import dual_weight
from .elements import elementary_lowering, elementary_raising, nonelementary_element
from .operators import SparseOperator, build_module, graded_bracket, verify_algebra

__version__ = "0.1.0"

__all__ = [
    "RadicalSum",
    "sqrt_of_rational",
    "Signature",
    "UnitaryClass",
    "UnitaryKind",
    "Weight",
    "classify",
    "parse_signature",
    "parse_weight",
    "GTPattern",
    "enumerate_basis",
    "validate",
    "weight_of",
    "dual_weight",
    "elementary_lowering",
    "elementary_raising",
    "nonelementary_element",
    "SparseOperator",
    "build_module",
    "graded_bracket",
    "verify_algebra",
]
