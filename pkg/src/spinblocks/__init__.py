"""Exact combinatorics and character calculus for spin symmetric group
blocks: bar-abacus displays, shifted-tableau branching, Brauer-tree walks
and integer-lattice verification of the block character identities."""

from .abacus import (
    Abacus,
    BarQuotient,
    block_enum,
    core_weight,
    ell,
    is_bar_core,
    k_product,
    neighbors,
    quotient,
)
from .chars import CharSpace, CharVector, m_action, m_action_matrix, orbit_sum
from .exceptions import CheckFailure, DomainError, ShapeError, SpaceMismatch
from .partitions import (
    ORDINARY,
    STRICT,
    as_partition,
    as_strict,
    box_moves,
    enumerate_partitions,
    epsilon,
    epsilon_exponent,
    is_odd_partition,
    path_count,
    shifted_diagram,
)
from .rouquier import StripCertificate, generate, is_rouquier, rho_extension, strip_classify
from .sqrt2 import Sqrt2Scalar
from .stembridge import MarkedTableau, f_coeff, induce, rock_branch, rock_branch_refined
from .trees import BrauerTree, GreenWalk, WeightOneTree, build, heller, walk, weight_one_map
from .verify import (
    CheckReport,
    NmvLattice,
    check_htoj,
    hyp_coeffs,
    nmv_basis,
    phi,
    run_check,
)

__version__ = "0.1.0"

__all__ = [
    "Abacus",
    "BarQuotient",
    "BrauerTree",
    "CharSpace",
    "CharVector",
    "CheckFailure",
    "CheckReport",
    "DomainError",
    "GreenWalk",
    "MarkedTableau",
    "NmvLattice",
    "ORDINARY",
    "STRICT",
    "ShapeError",
    "SpaceMismatch",
    "Sqrt2Scalar",
    "StripCertificate",
    "WeightOneTree",
    "as_partition",
    "as_strict",
    "block_enum",
    "box_moves",
    "build",
    "check_htoj",
    "core_weight",
    "ell",
    "enumerate_partitions",
    "epsilon",
    "epsilon_exponent",
    "f_coeff",
    "generate",
    "heller",
    "hyp_coeffs",
    "induce",
    "is_bar_core",
    "is_odd_partition",
    "is_rouquier",
    "k_product",
    "m_action",
    "m_action_matrix",
    "neighbors",
    "nmv_basis",
    "orbit_sum",
    "path_count",
    "phi",
    "quotient",
    "rho_extension",
    "rock_branch",
    "rock_branch_refined",
    "run_check",
    "shifted_diagram",
    "strip_classify",
    "walk",
    "weight_one_map",
]
