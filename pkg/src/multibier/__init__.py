"""Bier balls and Bier spheres of multicomplexes.

Construction and verification toolkit: facet enumeration, shellings,
f/h/g-vectors, Alexander duality, polarization identities, edge
decomposition certificates, and multigraded Betti numbers via Hochster's
formula with exact arithmetic.
"""

from .monomials import (
    MonomialIdeal,
    Multicomplex,
    alexander_dual,
    cap_monomials,
    closure_from_generators,
    colon,
    complement_ideal,
    diamond,
    divides,
    f_vector,
    ideal_alexander_dual,
    lcm_of,
    monomial_lcm,
    multicomplex,
    pure_power_ideal,
)
from .complexes import (
    FaceVectors,
    SimplicialComplex,
    Vtx,
    alexander_dual_complex,
    boundary,
    complex_from_facets,
    complex_from_ideal,
    complexes_equal,
    contraction,
    deleted_join_bier,
    face_vectors,
    is_o_sequence,
    join,
    link,
    link_condition,
    relabel,
    stanley_reisner,
    verify_shelling,
)
from .bier import (
    BierFacet,
    bier_ball,
    bier_sphere,
    classical_iso_check,
    complementary_ball,
    dual_iso_check,
    dual_vertex_map,
    is_cone,
    labeled_facet,
    lambda_complex,
    multicomplex_from_complex,
    shelling_order,
    sphere_facet_data,
)
from .polarization import (
    POL,
    POL_STAR,
    GeneratorFormula,
    ball_ideal_identity,
    generator_formula,
    linkage_identities,
    polarize,
    polarize_ideal,
    polarized_variables,
)
from .homology import (
    BettiTable,
    betti_table,
    hochster_betti,
    reduced_homology,
    verify_bier_betti,
    verify_cone_formula,
)
from .edgedecomp import (
    bier_decomposition,
    is_edge_decomposable,
    reduction_step,
    link_of_top_vertex,
    edge_link_model,
    edge_contraction_model,
    sphere_surrogate,
    verify_certificate,
)
from .verify import all_multicomplexes, full_check, random_multicomplex

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
