"""Common-divisor and prime-divisor simplicial complexes of integer sets."""

__version__ = "0.1.0"

from .arith import factorize, gcd_set, pi_of_set
from .divisor import IntegerSet, build_common, build_prime, eta
from .homology import H1Summary, h1, induced_h1_map
from .paths import EdgePath, eta_star, eta_star_inverse, homotopic_bounded, validate_path
from .presentation import abelianized_invariants, edge_path_group
from .simplicial import SimplicialComplex

__all__ = [
    "EdgePath",
    "H1Summary",
    "IntegerSet",
    "SimplicialComplex",
    "abelianized_invariants",
    "build_common",
    "build_prime",
    "edge_path_group",
    "eta",
    "eta_star",
    "eta_star_inverse",
    "factorize",
    "gcd_set",
    "h1",
    "homotopic_bounded",
    "induced_h1_map",
    "pi_of_set",
    "validate_path",
]
