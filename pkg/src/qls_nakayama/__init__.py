"""Exact computation of integrals, the modular element, the Nakayama automorphism
and the gradings it induces on liftings of quantum linear spaces."""

from .abelian_group import Character, FiniteAbelianGroup, GroupElement
from .analysis import AnalysisReport, analyze
from .config import ConfigError, InstanceConfig, parse_config, print_config
from .corpus import load_corpus, run_corpus
from .cyclotomic import CycScalar, RootOfUnity, format_scalar, parse_scalar, root_of_unity
from .frobenius import (
    dual_right_integral,
    frobenius_property_check,
    modular_element_closed_form,
    modular_element_derived,
    nakayama,
    nakayama_order,
    right_integral,
)
from .grading import (
    compute_h1_presentation,
    eigen_decompose,
    equidimensionality_check,
    strongly_graded_bruteforce,
    strongly_graded_theorem,
)
from .hopf_core import HopfAlgebra, HopfElement, InvalidDatum, LiftingDatum, Monomial, validate

__all__ = [
    "AnalysisReport", "Character", "ConfigError", "CycScalar", "FiniteAbelianGroup", "GroupElement",
    "HopfAlgebra", "HopfElement", "InstanceConfig", "InvalidDatum", "LiftingDatum", "Monomial",
    "RootOfUnity", "analyze", "compute_h1_presentation", "dual_right_integral", "eigen_decompose",
    "equidimensionality_check", "format_scalar", "frobenius_property_check", "load_corpus",
    "modular_element_closed_form", "modular_element_derived", "nakayama", "nakayama_order",
    "parse_config", "parse_scalar", "print_config", "right_integral", "root_of_unity", "run_corpus",
    "strongly_graded_bruteforce", "strongly_graded_theorem", "validate",
]
