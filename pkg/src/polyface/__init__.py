"""polyface: exact-arithmetic toolkit for 0/1 polytopes.

Vertex sets of boolean quadric, linear ordering, stable-set, and
double-covering polytopes; face extraction via supporting hyperplanes;
certified embeddings between the families; and an exact rational LP oracle
for hull membership, vertex adjacency, and face certificates.
"""

from .constructions import (
    Assertion,
    DcpEmbedding,
    Report,
    dcp_embedding,
    dcp_face_system,
    dcp_verify,
    lemma1_lift,
    lemma1_project,
    lemma1_system,
    lemma1_verify,
    theorem1_lift,
    theorem1_project,
    theorem1_system,
    theorem1_verify,
)
from .core import (
    AffineMapQ,
    CoordLayout,
    LinearForm,
    Permutation,
    Vertex01,
    VertexSet,
    lop_vertex_to_perm,
    pair_index,
    perm_to_lop_vertex,
    perm_to_sequence,
    sequence_to_perm,
    vertex_from_coords,
)
from .errors import (
    CapacityError,
    DimensionMismatchError,
    InvalidPairError,
    InvalidParameterError,
    InvalidPermutationError,
    InvalidVertexError,
    NotSupportingError,
    ParseError,
    PolyfaceError,
)
from .faces import (
    FaceExtraction,
    FaceSystem,
    InequalityCheck,
    SupportCheck,
    extract_face,
    is_valid_inequality,
    three_cycle_forms,
)
from .generators import (
    FourOnesMatrix,
    Graph,
    bqp_vertices,
    dcp_vertices,
    dcp_vertices_naive,
    lop_vertices,
    lop_vertices_oracle,
    stable_vertices,
)
from .geometry import (
    LPConstraint,
    LPProblem,
    LPResult,
    RationalPoint,
    adjacent,
    clique_check,
    conv_membership,
    is_face_subset,
    lp_feasible,
)

__version__ = "0.1.0"

__all__ = [
    "AffineMapQ",
    "Assertion",
    "CapacityError",
    "CoordLayout",
    "DcpEmbedding",
    "DimensionMismatchError",
    "FaceExtraction",
    "FaceSystem",
    "FourOnesMatrix",
    "Graph",
    "InequalityCheck",
    "InvalidPairError",
    "InvalidParameterError",
    "InvalidPermutationError",
    "InvalidVertexError",
    "LPConstraint",
    "LPProblem",
    "LPResult",
    "LinearForm",
    "NotSupportingError",
    "ParseError",
    "Permutation",
    "PolyfaceError",
    "RationalPoint",
    "Report",
    "SupportCheck",
    "Vertex01",
    "VertexSet",
    "adjacent",
    "bqp_vertices",
    "clique_check",
    "conv_membership",
    "dcp_embedding",
    "dcp_face_system",
    "dcp_verify",
    "dcp_vertices",
    "dcp_vertices_naive",
    "extract_face",
    "is_face_subset",
    "is_valid_inequality",
    "lemma1_lift",
    "lemma1_project",
    "lemma1_system",
    "lemma1_verify",
    "lop_vertex_to_perm",
    "lop_vertices",
    "lop_vertices_oracle",
    "lp_feasible",
    "pair_index",
    "perm_to_lop_vertex",
    "perm_to_sequence",
    "sequence_to_perm",
    "stable_vertices",
    "theorem1_lift",
    "theorem1_project",
    "theorem1_system",
    "theorem1_verify",
    "three_cycle_forms",
    "vertex_from_coords",
]
