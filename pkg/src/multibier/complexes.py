"""Labeled simplicial complexes and their combinatorial operations.

Vertices are either level-indexed labels ``Vtx(i, j)`` (rendered as
``x<i>^(<j>)``) or arbitrary hashable atoms (integers, strings).  A complex
stores an explicit ambient vertex set together with its inclusion-maximal
faces; all faces are implicit downward closures of the facets.

The complex {emptyset} (one empty facet) and the void complex (no facets at
all) are distinct values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .monomials import MonomialIdeal


@dataclass(frozen=True, order=True)
class Vtx:
    """The vertex x_i^(j): variable index i (1-based), level j."""

    var: int
    level: int


def label_key(v):
    """Canonical sort key usable across mixed label types."""
    if isinstance(v, Vtx):
        return (0, v.var, v.level)
    return (1, str(v))


def render_label(v) -> str:
    if isinstance(v, Vtx):
        return f"x{v.var}^({v.level})"
    return str(v)


def facet_key(f):
    return tuple(sorted(label_key(v) for v in f))


class SimplicialComplex:
    """Immutable simplicial complex with explicit ambient vertices."""

    __slots__ = ("vertices", "facets", "_faces")

    def __init__(self, vertices, facets):
        facets = frozenset(frozenset(f) for f in facets)
        vs = set(vertices)
        for f in facets:
            if not f <= vs:
                raise ValueError("facet uses a vertex outside the vertex set")
        object.__setattr__(self, "vertices", tuple(sorted(vs, key=label_key)))
        object.__setattr__(self, "facets", facets)
        object.__setattr__(self, "_faces", None)

    def __setattr__(self, *args):
        raise AttributeError("SimplicialComplex is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.vertices == other.vertices
            and self.facets == other.facets
        )

    def __hash__(self):
        return hash((self.vertices, self.facets))

    def __repr__(self):
        fs = ", ".join(
            "{" + " ".join(render_label(v) for v in sorted(f, key=label_key)) + "}"
            for f in sorted(self.facets, key=facet_key)
        )
        return f"<complex on {len(self.vertices)} vertices: {fs}>"

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        if self.is_void:
            return -2
        return max(len(f) for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def faces(self) -> frozenset[frozenset]:
        """All faces, the empty set included (for non-void complexes)."""
        if self._faces is None:
            out = set()
            for f in self.facets:
                fl = tuple(f)
                for k in range(len(fl) + 1):
                    out.update(map(frozenset, itertools.combinations(fl, k)))
            object.__setattr__(self, "_faces", frozenset(out))
        return self._faces

    def has_face(self, F) -> bool:
        F = frozenset(F)
        return any(F <= g for g in self.facets)

    def sorted_facets(self):
        return sorted(self.facets, key=facet_key)


def complex_from_facets(sets, vertices=None) -> SimplicialComplex:
    """Complex generated by the given sets; only maximal ones are stored."""
    sets = [frozenset(s) for s in sets] or [frozenset()]
    maximal = [f for f in sets if not any(f < g for g in sets)]
    if vertices is None:
        vertices = set().union(*sets) if sets else set()
    return SimplicialComplex(vertices, maximal)


EMPTY_FACET_COMPLEX = complex_from_facets([frozenset()])


@dataclass(frozen=True)
class FaceVectors:
    f: tuple[int, ...]
    h: tuple[int, ...]
    g: tuple[int, ...]


def h_from_f(f: tuple[int, ...]) -> tuple[int, ...]:
    d = len(f) - 1
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def g_from_h(h: tuple[int, ...]) -> tuple[int, ...]:
    d = len(h) - 1
    return (1,) + tuple(h[i] - h[i - 1] for i in range(1, d // 2 + 1))


def face_vectors(delta: SimplicialComplex) -> FaceVectors:
    """f by face enumeration; h and g by the defining relations."""
    if delta.is_void:
        raise ValueError("face vectors of the void complex are undefined")
    d = delta.dim + 1
    f = [0] * (d + 1)
    for face in delta.faces():
        f[len(face)] += 1
    f = tuple(f)
    h = h_from_f(f)
    return FaceVectors(f, h, g_from_h(h))


def join(delta: SimplicialComplex, gamma: SimplicialComplex) -> SimplicialComplex:
    if set(delta.vertices) & set(gamma.vertices):
        raise ValueError("join requires disjoint vertex sets")
    facets = [f | g for f in delta.facets for g in gamma.facets]
    return SimplicialComplex(set(delta.vertices) | set(gamma.vertices), facets)


def link(delta: SimplicialComplex, F) -> SimplicialComplex:
    """lk(F) = {G disjoint from F : G u F a face}, on the vertices it uses."""
    F = frozenset(F)
    if not delta.has_face(F):
        raise ValueError("link of a non-face")
    facets = {g - F for g in delta.facets if F <= g}
    facets = [f for f in facets if not any(f < g2 for g2 in facets)]
    verts = set().union(*facets) if facets else set()
    return SimplicialComplex(verts, facets)


def contraction(delta: SimplicialComplex, i, j) -> SimplicialComplex:
    """Identify vertex i with vertex j; requires {i, j} to be an edge."""
    if not delta.has_face({i, j}):
        raise ValueError("contraction requires {i, j} to be an edge")
    new_facets = set()
    for f in delta.facets:
        if i in f:
            f = (f - {i}) | {j}
        new_facets.add(f)
    return complex_from_facets(new_facets, set(delta.vertices) - {i})


def link_condition(delta: SimplicialComplex, i, j) -> bool:
    """lk(i) n lk(j) = lk({i,j}), checked against the ideal criterion.

    On a non-edge the condition is defined to be False.
    """
    if not delta.has_face({i, j}):
        return False
    li = link(delta, {i}).faces()
    lj = link(delta, {j}).faces()
    lij = link(delta, {i, j}).faces()
    by_links = (li & lj) == lij
    ideal = stanley_reisner(delta)
    order = {v: k for k, v in enumerate(delta.vertices)}
    by_ideal = not any(g[order[i]] and g[order[j]] for g in ideal.gens)
    assert by_links == by_ideal, "link-condition criteria disagree"
    return by_links


def boundary(b: SimplicialComplex) -> SimplicialComplex:
    """Subcomplex generated by the ridges lying in exactly one facet."""
    if b.is_void or not b.is_pure:
        raise ValueError("boundary requires a pure non-void complex")
    counts: dict[frozenset, int] = {}
    for f in b.facets:
        for v in f:
            r = f - {v}
            counts[r] = counts.get(r, 0) + 1
    if any(c > 2 for c in counts.values()):
        raise ValueError("a ridge lies in three or more facets")
    free = [r for r, c in counts.items() if c == 1]
    return complex_from_facets(free)


def verify_shelling(delta: SimplicialComplex, order) -> tuple[bool, tuple[int, ...] | None]:
    """Check a facet order for the shelling property.

    Returns (valid, h) where h counts, per step, the number of ridges
    generating the intersection with the earlier facets (h_0 for the first
    facet).  When valid, h is asserted to equal the h-vector of the complex.
    """
    order = [frozenset(f) for f in order]
    if not delta.is_pure or set(order) != set(delta.facets) or len(order) != len(delta.facets):
        return False, None
    d = delta.dim + 1
    h = [0] * (d + 1)
    h[0] = 1
    for k in range(1, len(order)):
        fk = order[k]
        earlier = order[:k]
        covered = {v for v in fk if any(fk - {v} <= fm for fm in earlier)}
        if not covered:
            return False, None
        for fm in earlier:
            if not (covered - fm):
                return False, None
        h[len(covered)] += 1
    h = tuple(h)
    assert h == face_vectors(delta).h, "shelling h-count disagrees with the h-vector"
    return True, h


def stanley_reisner(delta: SimplicialComplex) -> MonomialIdeal:
    """Squarefree ideal of the minimal non-faces, over delta.vertices."""
    if delta.is_void:
        raise ValueError("void complex has the unit Stanley-Reisner ideal")
    verts = delta.vertices
    order = {v: k for k, v in enumerate(verts)}
    faces = delta.faces()
    gens = set()
    for face in faces:
        for v in verts:
            if v in face:
                continue
            cand = face | {v}
            if cand in faces or cand in gens:
                continue
            if all(cand - {w} in faces for w in cand):
                gens.add(cand)
    exps = []
    for g in gens:
        e = [0] * len(verts)
        for v in g:
            e[order[v]] = 1
        exps.append(tuple(e))
    return MonomialIdeal.from_generators(len(verts), exps)


def complex_from_ideal(I: MonomialIdeal, vertex_labels) -> SimplicialComplex:
    """Inverse of stanley_reisner for squarefree ideals."""
    labels = list(vertex_labels)
    if len(labels) != I.nvars:
        raise ValueError("label count must match the variable count")
    for g in I.gens:
        if any(e > 1 for e in g):
            raise ValueError(f"generator {g} is not squarefree")
    gen_sets = [frozenset(labels[k] for k in range(I.nvars) if g[k]) for g in I.gens]
    facets = []
    for r in range(len(labels), -1, -1):
        for comb_ in itertools.combinations(labels, r):
            s = frozenset(comb_)
            if any(s <= f for f in facets):
                continue
            if not any(g <= s for g in gen_sets):
                facets.append(s)
    return SimplicialComplex(labels, facets)


def alexander_dual_complex(delta: SimplicialComplex) -> SimplicialComplex:
    """{F : complement of F is a non-face}, over the ambient vertex set."""
    verts = set(delta.vertices)
    n = len(verts)
    if delta.has_face(verts):
        raise ValueError("Alexander dual of the full simplex is void")
    faces = delta.faces()
    dual_facets = []
    for r in range(n, -1, -1):
        for comb_ in itertools.combinations(sorted(verts, key=label_key), r):
            s = frozenset(comb_)
            if any(s <= f for f in dual_facets):
                continue
            if frozenset(verts - s) not in faces:
                dual_facets.append(s)
    return SimplicialComplex(verts, dual_facets)


def deleted_join_bier(delta: SimplicialComplex) -> SimplicialComplex:
    """Deleted join of a complex on atoms [n] with its Alexander dual.

    The result lives on atoms x1..xn, y1..yn; its faces are X_F u Y_G with
    F a face, G a dual face, F and G disjoint.
    """
    verts = list(delta.vertices)
    dual = alexander_dual_complex(delta)
    xs = {v: f"x{v}" for v in verts}
    ys = {v: f"y{v}" for v in verts}
    faces = []
    for F in delta.faces():
        for G in dual.faces():
            if F & G:
                continue
            faces.append(frozenset({xs[v] for v in F} | {ys[v] for v in G}))
    return complex_from_facets(faces, set(xs.values()) | set(ys.values()))


def relabel(delta: SimplicialComplex, mapping) -> SimplicialComplex:
    """Image of the complex under an injective vertex map."""
    used = set(delta.vertices)
    get = mapping.get if isinstance(mapping, dict) else None
    def f(v):
        return mapping[v] if get else mapping(v)
    images = [f(v) for v in used]
    if len(set(images)) != len(images):
        raise ValueError("vertex map is not injective")
    return SimplicialComplex(images, [{f(v) for v in fac} for fac in delta.facets])


def complexes_equal(a: SimplicialComplex, b: SimplicialComplex) -> bool:
    """Facet-set equality (the ambient vertex sets may differ)."""
    return a.facets == b.facets


def _macaulay_pseudo_power(a: int, i: int) -> int:
    """a^<i>: Macaulay's upper bound for the next entry of an O-sequence."""
    if a == 0:
        return 0
    rep = []
    k = i
    rest = a
    while rest > 0 and k >= 1:
        m = k
        while comb(m + 1, k) <= rest:
            m += 1
        rep.append((m, k))
        rest -= comb(m, k)
        k -= 1
    return sum(comb(m + 1, k + 1) for m, k in rep)


def is_o_sequence(g) -> bool:
    """Macaulay's growth condition: 0 <= g_{i+1} <= g_i^<i> for i >= 1."""
    g = list(g)
    if not g or g[0] != 1:
        return False
    if any(x < 0 for x in g):
        return False
    for i in range(1, len(g) - 1):
        if g[i + 1] > _macaulay_pseudo_power(g[i], i):
            return False
    return True
