"""Good toric compactifications of subvarieties of the torus (C*)^n.

Exact lattice polytopes and fans, Laurent polynomials, resultant-based
elimination along a covector, and a driver that turns a system of
equations into ``codim`` equations whose Newton polytopes have affinely
independent edges.  The normal fan of their Minkowski sum is certified
good.
"""
__version__ = "0.1.0"

from .lattice import TorusSplit, complete_split, make_primitive, pull_up, push_down
from .polytope import (
    Fan,
    LatticePolytope,
    edges_affine_independent,
    face_in_direction,
    find_generic_covector,
    hull,
    is_convenient,
    is_developed,
    minkowski_sum,
    normal_fan,
    support_function,
)
from .laurent import LaurentPolynomial, ParseError, newton_polytope, parse
from .elimination import parametric_resultant, project, projection_equations, resultant
from .compactify import (
    CompactificationResult,
    GenericityError,
    build_convenient_fan,
    dimension,
    good_system,
    good_system_randomized,
)
from .mixedvol import bkk_number, mixed_volume, volume

__all__ = [
    "__version__",
    "TorusSplit", "complete_split", "make_primitive", "pull_up", "push_down",
    "Fan", "LatticePolytope", "edges_affine_independent", "face_in_direction",
    "find_generic_covector", "hull", "is_convenient", "is_developed",
    "minkowski_sum", "normal_fan", "support_function",
    "LaurentPolynomial", "ParseError", "newton_polytope", "parse",
    "parametric_resultant", "project", "projection_equations", "resultant",
    "CompactificationResult", "GenericityError", "build_convenient_fan",
    "dimension", "good_system", "good_system_randomized",
    "bkk_number", "mixed_volume", "volume",
]
