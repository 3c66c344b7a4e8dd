"""Exact characters for general linear Lie superalgebras at finite rank.

Irreducible, parabolic Verma, and tilting characters in five index-set
flavors, computed through canonical bases of fermionic Fock spaces and
cross-checked against parabolic Kazhdan-Lusztig polynomials.
"""

from .laurent import LaurentPoly, format_poly, parse_poly
from .partition import conjugate, from_theta, super_schur_monomials, theta
from .weight import DominantTuple, Flavor, Weight, finite_coordinates, from_weight, to_weight
from .dynkin import (
    BorelOrdering,
    OddRoot,
    flavor_window,
    odd_reflect,
    standard_window,
    transport_highest_weight,
)
from .hecke import kl_polynomial, parabolic_kl
from .fock import CBTable, FockMonomial, FockShape, WindowError, block_to_coxeter, transition_poly
from .characters import (
    CrossOracleError,
    FormalCharacter,
    VermaFlag,
    extract_verma_coefficients,
    gl_k2_character,
    irreducible_character,
    tilting_character,
    truncate_character,
    verma_character,
)

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "format_poly",
    "parse_poly",
    "conjugate",
    "theta",
    "from_theta",
    "super_schur_monomials",
    "DominantTuple",
    "Flavor",
    "Weight",
    "to_weight",
    "from_weight",
    "finite_coordinates",
    "BorelOrdering",
    "OddRoot",
    "flavor_window",
    "standard_window",
    "odd_reflect",
    "transport_highest_weight",
    "kl_polynomial",
    "parabolic_kl",
    "FockShape",
    "FockMonomial",
    "CBTable",
    "WindowError",
    "block_to_coxeter",
    "transition_poly",
    "CrossOracleError",
    "FormalCharacter",
    "VermaFlag",
    "verma_character",
    "irreducible_character",
    "tilting_character",
    "truncate_character",
    "extract_verma_coefficients",
    "gl_k2_character",
    "__version__",
]
