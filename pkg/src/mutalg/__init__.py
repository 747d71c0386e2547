"""Exact cluster-seed mutation, chart membership, gradings, and monomial lifting."""

from ._kernel import backend as kernel_backend
from .charts import (
    Chart,
    ChartTransition,
    MSAPresentation,
    chart_express,
    chart_membership,
    msa_membership,
    seed_presentation,
    seed_to_datum,
    transition_from_datum,
    upper_membership,
    validate_mutation,
    validate_presentation,
    valuation_membership,
)
from .cones import Cone, frozen_quadrant
from .grading import Grading, NotHomogeneousError, degree_of, grading_is_compatible, mutated_degree
from .lattice import is_primitive, monomial_valuation, pairing
from .laurent import ContextMismatchError, LaurentPolynomial, VariableContext
from .lifting import BlowupConfig, build_base_seed, lifted_seed, multiplicity_at_point, nu_matrix
from .mutdatum import Irreducibility, MutationDatum, certify_irreducible, datum_validate
from .parsing import ExpressionError, format_laurent, format_rational, parse_expr, parse_laurent
from .polyops import NotDivisibleError, exact_div, poly_gcd, try_exact_div
from .ratfunc import RationalFunction, substitute_laurent
from .seeds import Quiver, Seed, mutate_columns, skew_symmetrizer

__version__ = "0.1.0"

__all__ = [
    "BlowupConfig",
    "Chart",
    "ChartTransition",
    "Cone",
    "ContextMismatchError",
    "ExpressionError",
    "Grading",
    "Irreducibility",
    "LaurentPolynomial",
    "MSAPresentation",
    "MutationDatum",
    "NotDivisibleError",
    "NotHomogeneousError",
    "Quiver",
    "RationalFunction",
    "Seed",
    "VariableContext",
    "build_base_seed",
    "certify_irreducible",
    "chart_express",
    "chart_membership",
    "datum_validate",
    "degree_of",
    "exact_div",
    "format_laurent",
    "format_rational",
    "frozen_quadrant",
    "grading_is_compatible",
    "is_primitive",
    "kernel_backend",
    "lifted_seed",
    "monomial_valuation",
    "msa_membership",
    "multiplicity_at_point",
    "mutate_columns",
    "mutated_degree",
    "nu_matrix",
    "pairing",
    "parse_expr",
    "parse_laurent",
    "poly_gcd",
    "seed_presentation",
    "seed_to_datum",
    "skew_symmetrizer",
    "substitute_laurent",
    "transition_from_datum",
    "try_exact_div",
    "upper_membership",
    "validate_mutation",
    "validate_presentation",
    "valuation_membership",
    "__version__",
]
