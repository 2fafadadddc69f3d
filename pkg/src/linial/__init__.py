"""Shift-operator calculus for Linial-type arrangement polynomials.

The package computes characteristic quasi-polynomials of the deformed
reflection arrangements with hyperplane offsets 1..n, for every irreducible
root system, entirely in exact rational arithmetic.  The engine is a small
calculus of shift operators acting on quasi-polynomials: the alcove lattice
count supplies the quasi-polynomial, a weighted Eulerian-style polynomial
supplies the operator, and their pairing gives the characteristic polynomial.
A numeric root finder plus an exact real-rootedness certificate check that
all roots lie on the expected vertical line.
"""

from .arrangements import (
    char_poly,
    char_quasi,
    gcd_prime_polynomial,
    oracle_agreement_bound,
    oracle_count,
    verify_corollary1,
    verify_main_theorem,
    verify_rad_theorem,
    verify_shift_relation,
)
from .ehrhart import (
    PeriodConsistencyError,
    cross_type_relation_check,
    cyclotomic_factor,
    decompose_ehrhart,
    denumerant_count,
    ehrhart_quasi,
    partial_fractions,
    series_to_quasipoly,
)
from .eulerian import (
    eulerian,
    eulerian_congruence_check,
    generalized_congruence_operator,
    generalized_eulerian,
    generalized_eulerian_by_weyl,
)
from .quasipoly import (
    OperatorPoly,
    QuasiPoly,
    apply_S,
    apply_Sbar,
    has_gcd_property,
    minimal_period,
    operator_product,
    quasipoly_from_json,
    quasipoly_to_json,
    sigma_pow,
    tilde,
)
from .ratpoly import (
    RatPoly,
    X,
    congruent_mod_power,
    cyclotomic_type,
    compose_power,
    divides,
    moment_divisibility,
    poly_divmod,
    poly_gcd,
    render_poly,
    residue_split,
    shift_argument,
    sturm_count_real_roots,
)
from .rootline import RootFindingError, RootReport, find_roots, verify_line
from .rootsystems import (
    CLI_LABELS,
    GroupTooLargeError,
    PositiveRoot,
    RootSystemInfo,
    WeylElement,
    catalog,
    highest_root,
    positive_roots,
    weyl_elements,
)

__version__ = "0.1.0"

__all__ = [
    "CLI_LABELS",
    "GroupTooLargeError",
    "OperatorPoly",
    "PeriodConsistencyError",
    "PositiveRoot",
    "QuasiPoly",
    "RatPoly",
    "RootFindingError",
    "RootReport",
    "RootSystemInfo",
    "WeylElement",
    "X",
    "apply_S",
    "apply_Sbar",
    "catalog",
    "char_poly",
    "char_quasi",
    "compose_power",
    "congruent_mod_power",
    "cross_type_relation_check",
    "cyclotomic_factor",
    "cyclotomic_type",
    "decompose_ehrhart",
    "denumerant_count",
    "divides",
    "ehrhart_quasi",
    "eulerian",
    "eulerian_congruence_check",
    "find_roots",
    "gcd_prime_polynomial",
    "generalized_congruence_operator",
    "generalized_eulerian",
    "generalized_eulerian_by_weyl",
    "has_gcd_property",
    "highest_root",
    "minimal_period",
    "moment_divisibility",
    "operator_product",
    "oracle_agreement_bound",
    "oracle_count",
    "partial_fractions",
    "poly_divmod",
    "poly_gcd",
    "positive_roots",
    "quasipoly_from_json",
    "quasipoly_to_json",
    "render_poly",
    "residue_split",
    "series_to_quasipoly",
    "shift_argument",
    "sigma_pow",
    "sturm_count_real_roots",
    "tilde",
    "verify_corollary1",
    "verify_line",
    "verify_main_theorem",
    "verify_rad_theorem",
    "verify_shift_relation",
    "weyl_elements",
]
