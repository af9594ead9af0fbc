"""Sign matrix polytopes.

Enumeration of sign matrices and their tableau bijection, the polytopes they
span (all m x n sign matrices, fixed shape, fixed shape and first column),
exact membership and convex decomposition, vertex certificates, facets and
face lattices.  All arithmetic is exact.
"""

from .certificates import Hyperplane, certificate, hyperplane_mn, hyperplane_shape, verify_vertex
from .faces import (
    Component,
    FaceLattice,
    FacetEquality,
    face_lattice,
    facet_count,
    facet_count_hook,
    facet_count_mn,
    facet_count_rectangle,
    facet_count_shape,
    facet_count_two_row,
    facet_equalities,
    facet_equalities_from_proof,
    polytope_faces,
    region_count,
    true_facet_count,
    verify_facets,
    zero_dim_component,
)
from .linalg import affine_dimension, rational_rank
from .membership import (
    ConvexCombination,
    SplitResult,
    decompose,
    integer_points,
    membership,
    nonneg_equivalence_check,
    split,
    transportation_spec,
)
from .partial_sums import Circuit, find_fractional_circuit, partial_sums
from .sign_matrices import (
    MN,
    InvalidSignMatrix,
    Padded,
    Shape,
    ShapeFirstCol,
    SignMatrix,
    enumerate_family,
    enumerate_family_via_tableaux,
    in_family,
    is_asm,
    is_sign_matrix,
    phi,
    phi_inv,
    validate,
)
from .tableaux import (
    Partition,
    Tableau,
    conjugate,
    enumerate_ssyt,
    enumerate_ssyt_first_column,
    frequency_rep,
    gordon_count,
    hook_content_count,
)

__version__ = "0.1.0"
