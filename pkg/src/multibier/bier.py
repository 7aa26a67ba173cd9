"""Bier balls and Bier spheres of finite multicomplexes.

For a cap c and a multicomplex M the ball is generated by the labeled
facets F_c(x^a) = X-tilde minus {x_i^(a_i)} over a in M, and the sphere is
its boundary.  The sphere facets admit a direct description (drop one more
level above the base exponent) and carry a total order that is a shelling.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (
    SimplicialComplex,
    boundary,
    complex_from_facets,
    complexes_equal,
    face_vectors,
    relabel,
    Vtx,
)
from .monomials import (
    Multicomplex,
    alexander_dual,
    cap_monomials,
    diamond,
    f_vector,
    multicomplex,
)

# Above this total cap size the sphere constructor stops cross-checking the
# facet formula against boundary extraction (the expensive route).
VERIFY_LIMIT = 12


def all_levels(c) -> list[Vtx]:
    return [Vtx(i + 1, j) for i in range(len(c)) for j in range(c[i] + 1)]


def labeled_facet(a, c) -> frozenset[Vtx]:
    """F_c(x^a): every level of every variable except level a_i of x_i."""
    if any(ai > ci or ai < 0 for ai, ci in zip(a, c)):
        raise ValueError(f"{a} is not a c-monomial for c={c}")
    return frozenset(
        Vtx(i + 1, j) for i in range(len(c)) for j in range(c[i] + 1) if j != a[i]
    )


def lambda_complex(c) -> SimplicialComplex:
    """The join of the simplex boundaries: one factor per variable."""
    c = tuple(c)
    return SimplicialComplex(all_levels(c), [labeled_facet(a, c) for a in cap_monomials(c)])


def bier_ball(M: Multicomplex) -> SimplicialComplex:
    return SimplicialComplex(all_levels(M.cap), [labeled_facet(a, M.cap) for a in M.members])


def complementary_ball(M: Multicomplex) -> SimplicialComplex:
    """Generated by the labeled facets of the c-monomials outside M."""
    if M.is_full:
        raise ValueError("the full multicomplex has no complementary ball")
    return SimplicialComplex(
        all_levels(M.cap), [labeled_facet(a, M.cap) for a in M.non_members()]
    )


@dataclass(frozen=True)
class BierFacet:
    """The sphere facet G(x^a; x_i^j) = F_c(x^a) minus {x_i^(j)}."""

    base: tuple[int, ...]
    var: int
    level: int

    def vertex_set(self, c) -> frozenset[Vtx]:
        return labeled_facet(self.base, c) - {Vtx(self.var, self.level)}

    def __str__(self):
        b = "*".join(
            f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}"
            for i, e in enumerate(self.base)
            if e
        ) or "1"
        return f"G({b}; x{self.var}^{self.level})"


def sphere_facet_data(M: Multicomplex) -> list[BierFacet]:
    """All triples (a, i, j) with a in M, a_i < j <= c_i, a<>x_i^j not in M."""
    if M.is_full:
        raise ValueError("a full multicomplex has no Bier sphere")
    out = []
    for a in sorted(M.members):
        for i in range(M.nvars):
            for j in range(a[i] + 1, M.cap[i] + 1):
                if diamond(a, i + 1, j) not in M.members:
                    out.append(BierFacet(a, i + 1, j))
    return out


def bier_sphere(M: Multicomplex, method: str = "facets", verify: bool | None = None) -> SimplicialComplex:
    """The boundary sphere of the Bier ball.

    method="facets" uses the direct facet description, method="boundary"
    extracts the free ridges of the ball.  In verification mode (default for
    small caps) both are computed and asserted facet-identical.
    """
    if M.is_full:
        raise ValueError("a full multicomplex has no Bier sphere")
    if verify is None:
        verify = sum(M.cap) <= VERIFY_LIMIT
    by_facets = by_boundary = None
    if method == "facets" or verify:
        facets = [bf.vertex_set(M.cap) for bf in sphere_facet_data(M)]
        by_facets = complex_from_facets(facets)
    if method == "boundary" or verify:
        by_boundary = boundary(bier_ball(M))
    if verify and not complexes_equal(by_facets, by_boundary):
        raise AssertionError("facet formula and boundary extraction disagree")
    return by_facets if method == "facets" else by_boundary


def shelling_sort_key(bf: BierFacet):
    a, p, s = bf.base, bf.var, bf.level
    key = a[: p - 1] + (s,) + tuple(-e for e in a[p:])
    return (key, -p, a[p - 1])


def shelling_order(M: Multicomplex) -> list[BierFacet]:
    """Sphere facets sorted strictly decreasing in the shelling order."""
    facets = sphere_facet_data(M)
    ranked = sorted(facets, key=shelling_sort_key, reverse=True)
    keys = [shelling_sort_key(bf) for bf in ranked]
    assert len(set(keys)) == len(keys), "shelling order failed to separate two facets"
    return ranked


def predicted_h_and_g(M: Multicomplex) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """h-vector of the ball and g-vector of the sphere from member counts.

    h_i(ball) = f_i(M) and g_i(sphere) = f_i(M) - f_{|c|-i}(M); both are
    asserted against the face vectors of the constructed complexes.
    """
    f = f_vector(M)
    total = sum(M.cap)
    h_ball = f
    assert face_vectors(bier_ball(M)).h == h_ball
    if M.is_full:
        return h_ball, ()
    g_sphere = tuple(f[i] - f[total - i] for i in range((total - 1) // 2 + 1))
    g_sphere = (1,) + g_sphere[1:]
    assert face_vectors(bier_sphere(M)).g == g_sphere
    return h_ball, g_sphere


def dual_vertex_map(c) -> dict[Vtx, Vtx]:
    """The level-reversing permutation x_i^(j) -> x_i^(c_i - j)."""
    return {v: Vtx(v.var, c[v.var - 1] - v.level) for v in all_levels(c)}


def dual_iso_check(M: Multicomplex) -> bool:
    """Level reversal maps the sphere of M onto the sphere of the dual."""
    pi = dual_vertex_map(M.cap)
    image = relabel(bier_sphere(M), pi)
    return complexes_equal(image, bier_sphere(alexander_dual(M)))


def multicomplex_from_complex(delta: SimplicialComplex) -> Multicomplex:
    """Squarefree indicator exponents of the faces, over delta.vertices."""
    verts = list(delta.vertices)
    order = {v: k for k, v in enumerate(verts)}
    members = set()
    for face in delta.faces():
        e = [0] * len(verts)
        for v in face:
            e[order[v]] = 1
        members.add(tuple(e))
    return multicomplex((1,) * len(verts), members)


def classical_iso_check(delta: SimplicialComplex) -> bool:
    """Deleted-join sphere of a complex equals the cap-(1,..,1) sphere.

    The identification sends x_i to x_i^(0) and y_i to x_i^(1).
    """
    from .complexes import deleted_join_bier

    verts = list(delta.vertices)
    if delta.has_face(verts):
        raise ValueError("the full simplex has no deleted-join sphere")
    M = multicomplex_from_complex(delta)
    phi = {}
    for k, v in enumerate(verts):
        phi[f"x{v}"] = Vtx(k + 1, 0)
        phi[f"y{v}"] = Vtx(k + 1, 1)
    image = relabel(deleted_join_bier(delta), phi)
    return complexes_equal(image, bier_sphere(M))


def is_cone(delta: SimplicialComplex):
    """A vertex common to all facets, or None."""
    from .complexes import label_key

    common = None
    for f in delta.facets:
        common = set(f) if common is None else common & f
    return min(common, key=label_key) if common else None
