import pytest

from multibier.complexes import (
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


def test_maximality_filter():
    d = complex_from_facets([{1, 2}, {2}, {3}])
    assert d.facets == frozenset({frozenset({1, 2}), frozenset({3})})
    e = complex_from_facets([])
    assert e.facets == frozenset({frozenset()})
    assert e.dim == -1


def test_face_vectors_octahedron_shape():
    # boundary of the octahedron: 6 vertices, 12 edges, 8 triangles
    facets = []
    for a in (1, 2):
        for b in (3, 4):
            for c in (5, 6):
                facets.append({a, b, c})
    d = complex_from_facets(facets)
    fv = face_vectors(d)
    assert fv.f == (1, 6, 12, 8)
    assert fv.h == (1, 3, 3, 1)
    assert fv.g == (1, 2)


def test_join_counts_and_disjointness():
    a = complex_from_facets([{1}, {2}])
    b = complex_from_facets([{3}, {4}])
    j = join(a, b)
    assert len(j.facets) == 4
    with pytest.raises(ValueError):
        join(a, a)


def test_link_and_contraction():
    # 4-cycle 1-2-3-4
    cyc = complex_from_facets([{1, 2}, {2, 3}, {3, 4}, {4, 1}])
    lk = link(cyc, {1})
    assert lk.facets == frozenset({frozenset({2}), frozenset({4})})
    assert link_condition(cyc, 1, 2)
    tri = contraction(cyc, 1, 2)
    assert tri.facets == frozenset(
        {frozenset({2, 3}), frozenset({3, 4}), frozenset({4, 2})}
    )
    # diagonal {1,3} is not an edge
    assert not link_condition(cyc, 1, 3)


def test_boundary_of_simplex_and_errors():
    simplex = complex_from_facets([{1, 2, 3}])
    b = boundary(simplex)
    assert b.facets == frozenset(
        {frozenset({1, 2}), frozenset({2, 3}), frozenset({1, 3})}
    )
    point = complex_from_facets([{1}])
    assert boundary(point).facets == frozenset({frozenset()})
    mixed = complex_from_facets([{1, 2}, {3}])
    with pytest.raises(ValueError):
        boundary(mixed)


def test_verify_shelling_path():
    path = complex_from_facets([{1, 2}, {2, 3}])
    for order in ([{1, 2}, {2, 3}], [{2, 3}, {1, 2}]):
        ok, h = verify_shelling(path, [frozenset(f) for f in order])
        assert ok and tuple(h) == (1, 1, 0)
    # a disconnected pure complex is not shellable in any order
    two = complex_from_facets([{1, 2}, {3, 4}])
    ok, _ = verify_shelling(two, [frozenset({1, 2}), frozenset({3, 4})])
    assert not ok


def test_stanley_reisner_round_trip():
    d = complex_from_facets([{1, 2}, {3}], [1, 2, 3])
    I = stanley_reisner(d)
    assert set(I.gens) == {(1, 0, 1), (0, 1, 1)}
    back = complex_from_ideal(I, d.vertices)
    assert complexes_equal(back, d)


def test_alexander_dual_complex_bidual():
    d = complex_from_facets([{1, 2}, {3}], [1, 2, 3])
    dd = alexander_dual_complex(alexander_dual_complex(d))
    assert complexes_equal(dd, d)


def test_deleted_join_small():
    d = complex_from_facets([{1}, {2}], [1, 2])
    bj = deleted_join_bier(d)
    # classical Bier sphere over two ground elements is a 0-sphere
    assert bj.facets == frozenset({frozenset({"x1"}), frozenset({"x2"})})


def test_deleted_join_degenerate_n1():
    d = complex_from_facets([set()], [1])
    bj = deleted_join_bier(d)
    assert bj.facets == frozenset({frozenset()})


def test_relabel_checks_injectivity():
    d = complex_from_facets([{1, 2}])
    with pytest.raises(ValueError):
        relabel(d, {1: "a", 2: "a"})
    r = relabel(d, {1: "a", 2: "b"})
    assert r.facets == frozenset({frozenset({"a", "b"})})


def test_is_o_sequence():
    assert is_o_sequence((1, 2))
    assert is_o_sequence((1, 4, 10, 20))
    assert not is_o_sequence((1, 2, 4))
    assert not is_o_sequence((0, 1))


def test_vertex_ordering_is_by_index_then_level():
    d = complex_from_facets([{Vtx(2, 0), Vtx(1, 1)}, {Vtx(1, 0)}])
    assert d.vertices == (Vtx(1, 0), Vtx(1, 1), Vtx(2, 0))
