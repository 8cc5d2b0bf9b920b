"""Exact computations for Lie bialgebras, Poisson-Lie structures and quantum
deformations of the Euclidean group E(2)."""

__version__ = "0.1.0"

from .scalars import GaussianRational, I, format_scalar, parse_scalar
from .polynomial import Poly
from .lie import (
    Cobracket,
    LieAlgebra,
    WedgeElement,
    builtin_cobracket,
    check_bialgebra_axioms,
    check_lie_axioms,
    coboundary_solve,
    make_e2,
)
from .cocycle import GroupCocycle, assemble_cocycle, verify_cocycle
from .poisson import PoissonStructure, check_jacobi, check_multiplicativity, poisson_from_cocycle
from .noncomm import NCPolynomial, RewriteSystem, check_local_confluence, normal_form
from .hopf import HopfPresentation, builtin_family, check_hopf_axioms, check_star_structure
from .duality import derive_dual_coproduct
from .rmatrix import solve_R_truncated
from .verdict import Verdict

__all__ = [
    "GaussianRational", "I", "format_scalar", "parse_scalar", "Poly",
    "Cobracket", "LieAlgebra", "WedgeElement", "builtin_cobracket", "check_bialgebra_axioms",
    "check_lie_axioms", "coboundary_solve", "make_e2",
    "GroupCocycle", "assemble_cocycle", "verify_cocycle",
    "PoissonStructure", "check_jacobi", "check_multiplicativity", "poisson_from_cocycle",
    "NCPolynomial", "RewriteSystem", "check_local_confluence", "normal_form",
    "HopfPresentation", "builtin_family", "check_hopf_axioms", "check_star_structure",
    "derive_dual_coproduct", "solve_R_truncated", "Verdict",
]
