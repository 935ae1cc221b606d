"""Exact toolkit for strong-Lefschetz verification of Gorenstein algebras
generated by determinants, symmetric determinants, Pfaffians, quadrics, and
their powers."""

from .errors import (
    BadBasisError,
    BadPrimeError,
    InvalidSpecError,
    LefkitError,
    NotDominantError,
    NotLinearError,
    OutOfRangeError,
    TooLargeError,
    UnsupportedFamilyError,
    VarMismatchError,
    ZeroPolynomialError,
)
from .exactmath import (
    RatMatrix,
    Rational,
    mat_det,
    mat_kernel,
    mat_rank,
    mat_rank_modular_probe,
)
from .families import (
    FamilyKind,
    FamilySpec,
    canonical_lefschetz,
    coeffs_to_matrix,
    corner_minor,
    kind_from_name,
    make_invariant,
    orbit_test,
    pfaffian_poly,
)
from .lefschetz import (
    SlpReport,
    SlpRow,
    TheoremSummary,
    hessian_criterion_at,
    higher_hessian,
    slp_check,
    verify_theorem,
)
from .macaulay import (
    CatMatrix,
    HilbertFn,
    annihilator_basis,
    catalecticant,
    hilbert_function,
    socle_check,
)
from .polyring import (
    Monomial,
    Poly,
    contract,
    format_poly,
    monomials_of_degree,
    parse_poly,
    poly_mul,
    poly_pow,
)
from .reptheory import (
    ExponentTuple,
    narayana,
    narayana_hilbert,
    predicted_hilbert_typeC,
    q_mu,
    weyl_dim_gl,
)

__version__ = "0.1.0"

__all__ = [
    "BadBasisError",
    "BadPrimeError",
    "CatMatrix",
    "ExponentTuple",
    "FamilyKind",
    "FamilySpec",
    "HilbertFn",
    "InvalidSpecError",
    "LefkitError",
    "Monomial",
    "NotDominantError",
    "NotLinearError",
    "OutOfRangeError",
    "Poly",
    "RatMatrix",
    "Rational",
    "SlpReport",
    "SlpRow",
    "TheoremSummary",
    "TooLargeError",
    "UnsupportedFamilyError",
    "VarMismatchError",
    "ZeroPolynomialError",
    "annihilator_basis",
    "canonical_lefschetz",
    "catalecticant",
    "coeffs_to_matrix",
    "contract",
    "corner_minor",
    "format_poly",
    "hessian_criterion_at",
    "higher_hessian",
    "hilbert_function",
    "kind_from_name",
    "make_invariant",
    "mat_det",
    "mat_kernel",
    "mat_rank",
    "mat_rank_modular_probe",
    "monomials_of_degree",
    "narayana",
    "narayana_hilbert",
    "orbit_test",
    "parse_poly",
    "pfaffian_poly",
    "poly_mul",
    "poly_pow",
    "predicted_hilbert_typeC",
    "q_mu",
    "slp_check",
    "socle_check",
    "verify_theorem",
    "weyl_dim_gl",
]
