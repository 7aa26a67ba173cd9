import pytest

from multibier import (
    Vtx,
    alexander_dual,
    bier_decomposition,
    bier_sphere,
    complex_from_facets,
    complexes_equal,
    edge_contraction_model,
    edge_link_model,
    is_edge_decomposable,
    link,
    link_of_top_vertex,
    multicomplex,
    reduction_step,
    relabel,
    sphere_surrogate,
    verify_certificate,
)
from multibier.edgedecomp import UNKNOWN, BaseEmpty, BaseSimplexBoundary, EdgeStep

OCTA = multicomplex((2, 2), {(0, 0), (1, 0), (0, 1), (2, 0), (0, 2)})
SHELL = multicomplex((2, 2), {(0, 0), (1, 0), (0, 1), (0, 2)})


def test_generic_search_base_cases():
    empty = complex_from_facets([set()])
    ok, cert = is_edge_decomposable(empty)
    assert ok and isinstance(cert, BaseEmpty)
    tri = complex_from_facets([{1, 2}, {2, 3}, {1, 3}])
    ok, cert = is_edge_decomposable(tri)
    assert ok and isinstance(cert, BaseSimplexBoundary)


def test_generic_search_cycle():
    cyc = complex_from_facets([{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}])
    ok, cert = is_edge_decomposable(cyc)
    assert ok and isinstance(cert, EdgeStep)
    assert verify_certificate(cert)


def test_generic_search_budget():
    cyc = complex_from_facets([{1, 2}, {2, 3}, {3, 4}, {4, 1}])
    status, cert = is_edge_decomposable(cyc, budget=1)
    assert status == UNKNOWN and cert is None


def test_sphere_surrogate():
    assert sphere_surrogate(bier_sphere(OCTA))
    ball = complex_from_facets([{1, 2}])
    assert not sphere_surrogate(ball)


def test_link_of_top_vertex_identity():
    M2, c2 = link_of_top_vertex(OCTA)
    assert c2 == (1, 2)
    got = bier_sphere(M2)
    expect = link(bier_sphere(OCTA), {Vtx(1, 2)})
    assert complexes_equal(got, expect)


def test_edge_models_agree_with_direct_computation():
    M_link, c_link, vmap = edge_link_model(OCTA)
    assert c_link == (1, 1)
    sphere = bier_sphere(OCTA)
    image = relabel(link(sphere, {Vtx(1, 2), Vtx(2, 0)}), vmap)
    assert complexes_equal(image, bier_sphere(M_link))

    M_contr, c_contr, rho = edge_contraction_model(OCTA)
    # published contraction example: sigma keeps 1, x, x^2 at cap (4)
    assert c_contr == (4,)
    assert M_contr.members == frozenset({(0,), (1,), (2,)})


def test_reduction_step_cases():
    # both extreme levels present: nothing to reduce
    assert reduction_step(OCTA) is None
    # x2 never appears in the members, so x2^(0) is not a sphere vertex
    M = multicomplex((2, 2), {(0, 0), (1, 0), (2, 0)})
    M2, c2, vmap = reduction_step(M)
    assert c2 == (4,)
    assert M2.members == frozenset({(0,), (1,), (2,)})
    # dual case: c - e_n is a member, so x2^(c2) is not a sphere vertex
    Md = alexander_dual(M)
    out = reduction_step(Md)
    assert out is not None and out[1] == (4,)


def test_bier_decomposition_examples():
    for M in (OCTA, SHELL):
        cert = bier_decomposition(M)
        assert verify_certificate(cert)


def test_bier_decomposition_exhaustive_tiny():
    from multibier import all_multicomplexes

    for c in ((1,), (2,), (1, 1), (2, 1), (1, 2), (2, 2)):
        for M in all_multicomplexes(c):
            assert verify_certificate(bier_decomposition(M))


def test_bier_decomposition_missing_top_of_first_variable():
    # x1^(2) is in no sphere facet while both x2 extremes are present
    members = {(a, b) for a in range(3) for b in range(3)} - {(2, 1), (2, 2)}
    M = multicomplex((2, 2), members)
    vs = set().union(*bier_sphere(M).facets)
    assert Vtx(1, 2) not in vs
    assert Vtx(2, 0) in vs and Vtx(2, 2) in vs
    assert verify_certificate(bier_decomposition(M))


def test_bier_decomposition_rejects_full():
    full = multicomplex((1,), {(0,), (1,)})
    with pytest.raises(ValueError):
        bier_decomposition(full)
