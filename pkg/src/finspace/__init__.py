"""Certified simple homotopy for finite topological spaces.

Finite spaces are finite posets; weak points are the points whose removal
is an elementary move, and certificates record move sequences that a
separate verifier replays from the definitions.  Order complexes and face
posets carry the moves back and forth to simplicial complexes.
"""

from .spaces import ElementSubset, FiniteSpace, from_covers, is_isomorphic
from .moves import (
    SearchResult,
    SpaceEquivalence,
    SpaceMove,
    SpaceMoveCertificate,
    add_weak_point,
    beat_points,
    collapse_search,
    core,
    homotopy_equivalent,
    is_contractible,
    is_weak_point,
    remove_weak_point,
    verify_space_certificate,
    weak_points,
)
from .complexes import (
    SimplicialComplex,
    SimplicialMap,
    SimplicialMove,
    SimplicialMoveCertificate,
    barycentric_subdivision,
    collapse_sequence_search,
    complex_isomorphic,
    cone,
    from_facets,
    is_contiguous,
    verify_simplicial_certificate,
)
from .homology import HomologyReport, homology, homology_space, reduced_homology
from .maps import (
    ContinuousMap,
    DistinguishedReport,
    FenceResult,
    MembershipEvidence,
    fence_homotopic,
    is_distinguished,
    is_op_distinguished,
    is_valid_fence,
    mapping_cylinder,
    pointwise_leq,
    verify_membership_evidence,
)
from .functors import (
    BridgeCertificates,
    CylinderCertificates,
    bridge_space,
    contiguity_fence,
    cylinder_certificates,
    expand_cone_pairs,
    face_poset,
    h_map,
    induced_continuous,
    induced_simplicial,
    order_complex,
    space_subdivision,
    translate_simplicial_collapse,
    translate_space_collapse,
)
from .corpus import CorpusEntry, CorpusError

__version__ = "0.1.0"

__all__ = [
    "BridgeCertificates",
    "ContinuousMap",
    "CorpusEntry",
    "CorpusError",
    "CylinderCertificates",
    "DistinguishedReport",
    "ElementSubset",
    "FenceResult",
    "FiniteSpace",
    "HomologyReport",
    "MembershipEvidence",
    "SearchResult",
    "SimplicialComplex",
    "SimplicialMap",
    "SimplicialMove",
    "SimplicialMoveCertificate",
    "SpaceEquivalence",
    "SpaceMove",
    "SpaceMoveCertificate",
    "add_weak_point",
    "barycentric_subdivision",
    "beat_points",
    "bridge_space",
    "collapse_search",
    "collapse_sequence_search",
    "complex_isomorphic",
    "cone",
    "contiguity_fence",
    "core",
    "cylinder_certificates",
    "expand_cone_pairs",
    "face_poset",
    "fence_homotopic",
    "from_covers",
    "from_facets",
    "h_map",
    "homology",
    "homology_space",
    "homotopy_equivalent",
    "induced_continuous",
    "induced_simplicial",
    "is_contiguous",
    "is_contractible",
    "is_distinguished",
    "is_isomorphic",
    "is_op_distinguished",
    "is_valid_fence",
    "is_weak_point",
    "mapping_cylinder",
    "order_complex",
    "pointwise_leq",
    "reduced_homology",
    "remove_weak_point",
    "space_subdivision",
    "translate_simplicial_collapse",
    "translate_space_collapse",
    "verify_membership_evidence",
    "verify_simplicial_certificate",
    "verify_space_certificate",
    "weak_points",
]
